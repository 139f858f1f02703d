#include "lefschetz/io.hpp"

#include <openssl/evp.h>
#include <yaml-cpp/yaml.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "lefschetz/error.hpp"

namespace lefschetz::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

YAML::Node load_document(std::string_view document) {
  try {
    YAML::Node root = YAML::Load(std::string(document));
    if (!root.IsMap()) throw Error(ErrorCode::ParseError, "document must be a mapping");
    return root;
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed document: ") + e.what());
  }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& what) {
  try {
    if (!node.IsScalar()) throw Error(ErrorCode::ParseError, what + " must be a scalar");
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw Error(ErrorCode::ParseError, what + " has the wrong type");
  }
}

YAML::Node required(const YAML::Node& root, const std::string& key) {
  YAML::Node n = root[key];
  if (!n) throw Error(ErrorCode::ParseError, "missing key '" + key + "'");
  return n;
}

Integer big_integer(const YAML::Node& node, const std::string& what) {
  const auto text = scalar<std::string>(node, what);
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, what + " is not an integer: '" + text + "'");
  return v;
}

// Anything yaml-cpp throws past the explicit checks is still malformed input.
template <typename F>
auto yaml_guard(F&& body) {
  try {
    return body();
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed document: ") + e.what());
  }
}

}  // namespace

HomogeneousCurve load_curve(std::string_view document) {
  return yaml_guard([&] {
    const YAML::Node root = load_document(document);
    const auto text = scalar<std::string>(required(root, "curve"), "curve");
    std::vector<std::string> vars = projective_variables();
    if (const YAML::Node v = root["variables"]) {
      if (!v.IsSequence() || v.size() != 3) throw Error(ErrorCode::ParseError, "variables must list three names");
      vars.clear();
      for (const auto& name : v) vars.push_back(scalar<std::string>(name, "variable name"));
    }
    const Polynomial f = parse(text, vars);
    std::vector<Polynomial> images;
    for (const auto& name : projective_variables()) images.push_back(Polynomial::variable(projective_variables(), name));
    return HomogeneousCurve(compose(f, images));
  });
}

RamificationProfile load_profile(std::string_view document) {
  return yaml_guard([&] {
    const YAML::Node root = load_document(document);
    RamificationProfile p;
    p.degree = scalar<std::int64_t>(required(root, "degree"), "degree");
    p.base_genus = scalar<std::int64_t>(required(root, "base_genus"), "base_genus");
    if (const YAML::Node fibers = root["fibers"]) {
      if (!fibers.IsSequence()) throw Error(ErrorCode::ParseError, "fibers must be a list of lists");
      for (const auto& fiber : fibers) {
        if (!fiber.IsSequence()) throw Error(ErrorCode::ParseError, "each fiber must be a list");
        std::vector<std::int64_t> f;
        for (const auto& n : fiber) f.push_back(scalar<std::int64_t>(n, "ramification index"));
        p.fibers.push_back(std::move(f));
      }
    }
    return p;
  });
}

ChainComplex load_complex(std::string_view document) {
  return yaml_guard([&] {
    const YAML::Node root = load_document(document);
    const YAML::Node ranks_node = required(root, "ranks");
    if (!ranks_node.IsSequence() || ranks_node.size() == 0) throw Error(ErrorCode::ParseError, "ranks must be a non-empty list");
    std::vector<std::size_t> ranks;
    for (const auto& r : ranks_node) {
      const auto v = scalar<std::int64_t>(r, "rank");
      if (v < 0) throw Error(ErrorCode::ParseError, "ranks must be non-negative");
      ranks.push_back(static_cast<std::size_t>(v));
    }

    std::vector<IntegerMatrix> boundaries;
    for (std::size_t lambda = 1; lambda < ranks.size(); ++lambda)
      boundaries.emplace_back(ranks[lambda - 1], ranks[lambda]);
    const YAML::Node bnode = root["boundary"] ? root["boundary"] : root["boundaries"];
    if (bnode) {
      if (!bnode.IsMap()) throw Error(ErrorCode::ParseError, "boundaries must map degrees to matrices");
      for (const auto& entry : bnode) {
        const auto lambda = scalar<std::int64_t>(entry.first, "boundary degree");
        if (lambda < 1 || static_cast<std::size_t>(lambda) >= ranks.size())
          throw Error(ErrorCode::ParseError, "boundary degree " + std::to_string(lambda) + " is out of range");
        const std::string what = "boundary " + std::to_string(lambda);
        if (!entry.second.IsSequence()) throw Error(ErrorCode::ParseError, what + " must be a list of rows");
        std::vector<std::vector<Integer>> rows;
        for (const auto& row : entry.second) {
          if (!row.IsSequence()) throw Error(ErrorCode::ParseError, what + " must be a list of rows");
          std::vector<Integer> r;
          for (const auto& x : row) r.push_back(big_integer(x, what + " entry"));
          rows.push_back(std::move(r));
        }
        const auto l = static_cast<std::size_t>(lambda);
        boundaries[l - 1] = IntegerMatrix::from_rows(ranks[l - 1], ranks[l], rows);
      }
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
  });
}

std::string digest(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  ensure(EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) == 1, "sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<std::complex<double>> parse_complex(std::string_view text) {
#define LEFSCHETZ_NUM R"((\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?))"
  static const std::regex real_only(R"(^\s*([+-]?))" LEFSCHETZ_NUM R"(\s*$)");
  static const std::regex imag_only(R"(^\s*([+-]?))" LEFSCHETZ_NUM R"(?\s*\*?\s*i\s*$)");
  static const std::regex both(R"(^\s*([+-]?))" LEFSCHETZ_NUM R"(\s*([+-])\s*)" LEFSCHETZ_NUM R"(?\s*\*?\s*i\s*$)");
#undef LEFSCHETZ_NUM
  const std::string s(text);
  auto value = [](const std::ssub_match& sign, const std::ssub_match& num) {
    const double v = num.matched ? std::stod(num.str()) : 1.0;
    return sign.str() == "-" ? -v : v;
  };
  std::smatch m;
  if (std::regex_match(s, m, real_only)) return std::complex<double>(value(m[1], m[2]), 0.0);
  if (std::regex_match(s, m, imag_only)) return std::complex<double>(0.0, value(m[1], m[2]));
  if (std::regex_match(s, m, both)) return std::complex<double>(value(m[1], m[2]), value(m[3], m[4]));
  return std::nullopt;
}

}  // namespace lefschetz::io
