#include <gtest/gtest.h>

#include "lefschetz/commands.hpp"
#include "lefschetz/io.hpp"

using namespace lefschetz;

TEST(Io, ParseComplex) {
  EXPECT_EQ(io::parse_complex("0.01"), std::complex<double>(0.01, 0));
  EXPECT_EQ(io::parse_complex("-2.5e-3"), std::complex<double>(-2.5e-3, 0));
  EXPECT_EQ(io::parse_complex("0.01+0.02i"), std::complex<double>(0.01, 0.02));
  EXPECT_EQ(io::parse_complex("0.01 - 0.02*i"), std::complex<double>(0.01, -0.02));
  EXPECT_EQ(io::parse_complex("-3i"), std::complex<double>(0, -3));
  EXPECT_EQ(io::parse_complex("i"), std::complex<double>(0, 1));
  EXPECT_FALSE(io::parse_complex("").has_value());
  EXPECT_FALSE(io::parse_complex("1 2i").has_value());
  EXPECT_FALSE(io::parse_complex("abc").has_value());
}

TEST(Io, FormatRealRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) EXPECT_EQ(std::stod(io::format_real(v)), v);
  EXPECT_EQ(io::format_real(0.1), "0.10000000000000001");
}

TEST(Io, Digest) {
  EXPECT_EQ(io::digest(""), "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Io, LoadCurveRenamesVariables) {
  const auto c = io::load_curve("curve: \"a^2 + b^2 + c^2\"\nvariables: [a, b, c]\n");
  EXPECT_EQ(c.to_string(), "x^2 + y^2 + z^2");
  EXPECT_THROW(io::load_curve("curve: [1, 2]\n"), Error);
  EXPECT_THROW(io::load_curve("nothing: here\n"), Error);
  EXPECT_THROW(io::load_curve("{{{"), Error);
}

TEST(Io, LoadComplex) {
  const auto c = io::load_complex("ranks: [1, 2, 1]\nboundary:\n  2: [[0], [2]]\n");
  EXPECT_EQ(c.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_TRUE(c.boundary(1).is_zero());
  EXPECT_EQ(c.boundary(2)(1, 0), 2);
  const auto big = io::load_complex("ranks: [1, 1]\nboundary: {1: [[\"100000000000000000000000\"]]}\n");
  EXPECT_EQ(big.boundary(1)(0, 0), Integer("100000000000000000000000"));
  EXPECT_THROW(io::load_complex("ranks: [1, 2]\nboundary: {1: [[1]]}\n"), Error);
  EXPECT_THROW(io::load_complex("ranks: [1, 2]\nboundary: {3: [[1, 1]]}\n"), Error);
  EXPECT_THROW(io::load_complex("ranks: [1, 2]\nboundary: {1: [[1, x]]}\n"), Error);

  EXPECT_TRUE(io::load_complex("ranks: [1, 2, 1]\n").boundary(2).is_zero());
  EXPECT_EQ(io::load_complex("ranks: [1, 1]\nboundaries: {1: [[3]]}\n").boundary(1)(0, 0), 3);
}

TEST(Io, LoadProfileAcceptsJson) {
  const auto p = io::load_profile(R"({"degree": 2, "base_genus": 0, "fibers": [[2], [2]]})");
  EXPECT_EQ(p.degree, 2);
  EXPECT_EQ(p.fibers.size(), 2u);
  EXPECT_THROW(io::load_profile("degree: 2\n"), Error);
}

TEST(Commands, ExitCodes) {
  cli::RunConfig config;
  EXPECT_EQ(cli::exit_code(cli::curve_analyze("curve: \"x^3 + y^3 + z^3\"\n", config).error), 0);
  EXPECT_EQ(cli::exit_code(cli::curve_analyze("curve: \"x*y*z\"\n", config).error), 2);
  EXPECT_EQ(cli::exit_code(cli::curve_analyze("curve: \"x^2*y + y^2*x + y^3\"\n", config).error), 2);
  EXPECT_EQ(cli::exit_code(cli::curve_analyze("curve: \"x^3 +\"\n", config).error), 1);
  EXPECT_EQ(cli::exit_code(cli::rh("degree: 2\nbase_genus: 0\nfibers: [[2]]\n", config).error), 2);
  EXPECT_EQ(cli::exit_code(cli::homology("ranks: [1, 2, 1]\nboundary: {1: [[1, 1]], 2: [[1], [1]]}\n", config).error), 2);
  EXPECT_EQ(cli::exit_code(cli::perturb(3, 0.1, 0.0, config).error), 2);
  EXPECT_EQ(cli::exit_code(cli::hessian(0, 0, 2, config).error), 2);
  EXPECT_EQ(cli::exit_code(ErrorCode::InvariantBreach), 3);
}

TEST(Commands, MachineOutputIsStable) {
  cli::RunConfig config;
  const std::string doc = "curve: \"x^4 + y^4 + z^4 + x^2*y*z + x*y^3\"\n";
  const auto a = cli::render(cli::curve_analyze(doc, config), cli::Format::machine);
  const auto b = cli::render(cli::curve_analyze(doc, config), cli::Format::machine);
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["payload"]["genus"], 3);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_TRUE(j["error"].is_null());
}

TEST(Commands, CurveThenRhAgreeOnGenus) {
  cli::RunConfig config;
  for (const char* curve : {"x + y + z", "x^2 + y^2 + z^2", "x^3 + y^3 + z^3", "x^4 + y^4 + z^4"}) {
    const auto c = cli::curve_analyze(std::string("curve: \"") + curve + "\"\n", config);
    const std::int64_t d = c.payload["degree"];
    std::string profile = "degree: " + std::to_string(d) + "\nbase_genus: 0\nfibers: [";
    for (std::int64_t k = 0; k < d * (d - 1); ++k) {
      profile += k ? ", [2" : "[2";
      for (std::int64_t j = 2; j < d; ++j) profile += ", 1";
      profile += "]";
    }
    profile += "]\n";
    const auto r = cli::rh(profile, config);
    EXPECT_EQ(c.payload["genus"], r.payload["genus"]) << curve;
  }
}
