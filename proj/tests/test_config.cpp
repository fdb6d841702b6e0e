#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "mgom/config.hpp"
#include "mgom/constants.hpp"
#include "mgom/quantum_noise.hpp"
#include "mgom/textio.hpp"
#include "support/oracles.hpp"

using namespace mgom;
using mgom::testing::rel_diff;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* minimal = R"(
[oscillator]
mass_kg = 1e-6
f_m_hz = 1
q = 1e5

[cavity]
length_m = 0.1
finesse = 100

[laser]
wavelength_m = 1.064e-6
p_circ_w = 1
)";

}  // namespace

TEST_SUITE("config") {

TEST_CASE("minimal config parses and converts Hz at the boundary") {
  const auto config = parse_config(minimal);
  REQUIRE(config.oscillator.has_value());
  CHECK(config.oscillator->damping == DampingModel::viscous);
  CHECK(config.oscillator->temperature_k == 300.0);
  const auto sys = build_system(config);
  CHECK(sys.osc.omega_m == doctest::Approx(constants::two_pi).epsilon(1e-12));
  CHECK(sys.p_circ == 1.0);
  CHECK(sys.resp.finesse == doctest::Approx(100.0));
}

TEST_CASE("mutually exclusive power keys are rejected") {
  const char* both = R"(
[oscillator]
mass_kg = 1e-6
f_m_hz = 1
q = 1e5

[cavity]
length_m = 0.1
finesse = 100

[laser]
wavelength_m = 1.064e-6
power_in_w = 1
p_circ_w = 1
)";
  CHECK_THROWS_WITH_AS(parse_config(both),
                       "section 'laser': power_in_w and p_circ_w are mutually "
                       "exclusive",
                       ConfigError);
}

TEST_CASE("unknown keys and sections carry line diagnostics") {
  try {
    parse_config("[oscillator]\nmass_kg = 1e-6\nf_m_hz = 1\nq = 1\nbogus = 3\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 5") != std::string::npos);
    CHECK(msg.find("bogus") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("[warp_drive]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[oscillator]\nmass_kg = 1\nmass_kg = 2\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("mass_kg = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[oscillator]\nmass_kg = banana\n"), ConfigError);
}

TEST_CASE("missing required keys are named") {
  try {
    parse_config("[oscillator]\nmass_kg = 1e-6\nq = 1e5\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("f_m_hz") != std::string::npos);
  }
}

TEST_CASE("cavity needs exactly one of finesse / t_in") {
  CHECK_THROWS_AS(parse_config("[cavity]\nlength_m = 0.1\n"), ConfigError);
  CHECK_THROWS_AS(
      parse_config("[cavity]\nlength_m = 0.1\nfinesse = 10\nt_in = 0.01\n"),
      ConfigError);
}

TEST_CASE("curvature values accept numbers and the word flat") {
  const auto config = parse_config(
      "[cavity]\nlength_m = 0.1\nfinesse = 10\nr1_m = flat\nr2_m = -0.5\n");
  CHECK(config.cavity->r1.is_flat());
  CHECK(config.cavity->r2.radius() == doctest::Approx(-0.5));
}

TEST_CASE("environment area auto requires the mirror geometry") {
  CHECK_THROWS_AS(
      parse_config("[environment]\npressure_pa = 1e-5\narea_m2 = auto\n"),
      ConfigError);
  const auto ok = parse_config(
      "[environment]\npressure_pa = 1e-5\narea_m2 = auto\n"
      "mirror_radius_m = 1e-3\nmirror_thickness_m = 1.4e-4\n");
  CHECK(ok.environment->area() ==
        doctest::Approx(cylinder_area(1e-3, 1.4e-4)).epsilon(1e-12));
  CHECK(ok.environment->molecule_mass() ==
        doctest::Approx(*gas_molecule_mass("helium")).epsilon(1e-12));
}

TEST_CASE("custom wire material requires a loss number") {
  const char* no_loss = R"(
[suspension]
material = custom
e_pa = 72e9
rho_kgm3 = 2200
h_pa = 4e9
nu = 0.17
alpha_1k = 5.5e-7
c_jkgk = 746
kappa_wmk = 1.38
r_w_m = 0.5e-6
l_w_m = 0.05
)";
  CHECK_THROWS_AS(parse_config(no_loss), ConfigError);
  const std::string with_loss = std::string(no_loss) + "q_el = 143\n";
  const auto config = parse_config(with_loss);
  CHECK(config.suspension->material.q_intrinsic == 143.0);

  std::string bad_nu = with_loss;
  const std::string needle = "nu = 0.17";
  bad_nu.replace(bad_nu.find(needle), needle.size(), "nu = 0.6");
  CHECK_THROWS_AS(parse_config(bad_nu), ConfigError);
}

TEST_CASE("the shipped example config round-trips through serialization") {
  const std::string text =
      read_file(std::string(MGOM_SOURCE_DIR) + "/configs/fig3.cfg");
  const auto first = parse_config(text);
  const std::string canonical = serialize_config(first);
  const auto second = parse_config(canonical);
  CHECK(serialize_config(second) == canonical);
}

TEST_CASE("every section survives a serialization round trip") {
  const char* full = R"(
[oscillator]
mass_kg = 7e-6
f_m_hz = 2.2
q = 2e6
damping = structure
temperature_k = 4.2

[cavity]
length_m = 0.1
t_in = 0.01
extra_loss = 0.002
r1_m = flat
r2_m = -0.35

[laser]
wavelength_m = 1.55e-6
power_in_w = 0.25
detuning_hz = -120
efficiency = 0.8

[environment]
pressure_pa = 2e-6
gas = nitrogen
shape_c = 1.5
area_m2 = auto
mirror_radius_m = 1.5e-3
mirror_thickness_m = 0.5e-3

[suspension]
material = custom
e_pa = 230e9
rho_kgm3 = 1800
h_pa = 4e9
nu = 0.2
alpha_1k = 1e-7
c_jkgk = 710
kappa_wmk = 10
q_el_surface_per_m = 2e12
r_w_m = 3e-6
l_w_m = 0.022
n_w = 1
s_w = 2.5
bond_loss = 1e-2
thermoelastic_nulled = true

[torsion]
d_m = 0.015
a = 0.25

[levitation]
enabled = true

[effective]
f_eff_hz = 1000

[upper_cavity]
length_m = 0.05
p_circ_w = 300
detuning_hz = 10
r1_m = 0.03
r2_m = 0.03
)";
  const auto first = parse_config(full);
  REQUIRE(first.environment.has_value());
  REQUIRE(first.suspension.has_value());
  REQUIRE(first.torsion.has_value());
  REQUIRE(first.levitation.has_value());
  REQUIRE(first.effective.has_value());
  REQUIRE(first.upper_cavity.has_value());
  CHECK(first.suspension->material.q_el(3e-6) == doctest::Approx(6e6));
  CHECK(first.suspension->thermoelastic_nulled);
  const std::string canonical = serialize_config(first);
  CHECK(serialize_config(parse_config(canonical)) == canonical);
}

TEST_CASE("the shipped config reproduces the SQL crossing end to end") {
  const auto config = load_config_file(std::string(MGOM_SOURCE_DIR) +
                                       "/configs/fig3.cfg");
  const auto sys = build_system(config);
  const auto input = quantum_noise_input(sys.osc, sys.coupling, sys.resp,
                                         sys.drive.efficiency);
  const auto sql = sql_touching_frequency(input);
  CHECK(rel_diff(sql.omega, constants::two_pi * 500.0) < 0.02);
}

TEST_CASE("finesse and t_in routes agree on the decay rate") {
  const auto a = parse_config(minimal);
  const auto resp_a = build_system(a).resp;
  // Same finesse expressed through the input transmission, over-coupled.
  std::string via_tin = std::string(minimal);
  const std::string needle = "finesse = 100";
  via_tin.replace(via_tin.find(needle), needle.size(),
                  "t_in = " + format_sci(constants::two_pi / 100.0));
  const auto resp_b = build_system(parse_config(via_tin)).resp;
  CHECK(rel_diff(resp_a.kappa, resp_b.kappa) < 1e-9);
}

TEST_CASE("power-in route resolves the circulating power through the cavity") {
  const char* text = R"(
[oscillator]
mass_kg = 1e-6
f_m_hz = 1
q = 1e5

[cavity]
length_m = 0.1
t_in = 0.0314159265359
extra_loss = 0.0314159265359

[laser]
wavelength_m = 1.064e-6
power_in_w = 1
)";
  const auto sys = build_system(parse_config(text));
  CHECK(sys.p_circ == doctest::Approx(31.831).epsilon(1e-4));
  CHECK(sys.geometry.has_value());
}

}  // TEST_SUITE
