#include "mgom/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "mgom/textio.hpp"

namespace mgom {

namespace {

struct RawEntry {
  std::string value;
  int line;
  bool used = false;
};

using Section = std::map<std::string, RawEntry>;
using Sections = std::map<std::string, Section>;

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

Sections tokenize(std::string_view text) {
  static const char* known_sections[] = {
      "oscillator", "cavity", "laser", "environment", "suspension",
      "torsion", "levitation", "effective", "upper_cavity"};

  Sections out;
  std::string current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      const std::string name(trim(line.substr(1, line.size() - 2)));
      bool known = false;
      for (const char* s : known_sections) known |= name == s;
      if (!known) fail(line_no, "unknown section '" + name + "'");
      if (out.count(name)) fail(line_no, "duplicate section '" + name + "'");
      out[name];
      current = name;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(line_no, "expected 'key = value'");
    if (current.empty()) fail(line_no, "key outside of any section");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty()) fail(line_no, "empty key or value");
    auto [it, inserted] =
        out[current].emplace(key, RawEntry{value, line_no, false});
    if (!inserted)
      fail(line_no, "duplicate key '" + key + "' in section '" + current + "'");
  }
  return out;
}

/// Typed accessors over one section; every fetched key is marked used so
/// leftovers can be rejected with their locations.
class SectionReader {
 public:
  SectionReader(const std::string& name, Section& entries)
      : name_(name), entries_(entries) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::optional<std::string> get_string(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    it->second.used = true;
    return it->second.value;
  }

  std::optional<double> get_number(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    it->second.used = true;
    const std::string& v = it->second.value;
    double value = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), value);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
      fail(it->second.line, "key '" + key + "' expects a number, got '" + v + "'");
    return value;
  }

  double require_number(const std::string& key) {
    auto v = get_number(key);
    if (!v)
      throw ConfigError("section '" + name_ + "': missing required key '" +
                        key + "'");
    return *v;
  }

  std::optional<bool> get_bool(const std::string& key) {
    auto v = get_string(key);
    if (!v) return std::nullopt;
    if (*v == "true") return true;
    if (*v == "false") return false;
    fail(entries_.at(key).line, "key '" + key + "' expects true or false");
  }

  /// Finite signed radius or the word "flat".
  std::optional<Curvature> get_curvature(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    if (it->second.value == "flat") {
      it->second.used = true;
      return Curvature::flat();
    }
    return Curvature::finite(*get_number(key));
  }

  int line_of(const std::string& key) const { return entries_.at(key).line; }

  void finish() const {
    for (const auto& [key, entry] : entries_)
      if (!entry.used)
        fail(entry.line, "unknown key '" + key + "' in section '" + name_ + "'");
  }

 private:
  const std::string& name_;
  Section& entries_;
};

OscillatorSection read_oscillator(SectionReader& r) {
  OscillatorSection s;
  s.mass_kg = r.require_number("mass_kg");
  s.f_m_hz = r.require_number("f_m_hz");
  s.q = r.require_number("q");
  if (auto d = r.get_string("damping")) {
    if (*d == "viscous") s.damping = DampingModel::viscous;
    else if (*d == "structure") s.damping = DampingModel::structure;
    else fail(r.line_of("damping"), "damping must be 'viscous' or 'structure'");
  }
  if (auto t = r.get_number("temperature_k")) s.temperature_k = *t;
  return s;
}

CavitySection read_cavity(SectionReader& r) {
  CavitySection s;
  s.length_m = r.require_number("length_m");
  s.finesse = r.get_number("finesse");
  s.t_in = r.get_number("t_in");
  if (auto e = r.get_number("extra_loss")) s.extra_loss = *e;
  if (s.finesse && s.t_in)
    throw ConfigError("section 'cavity': finesse and t_in are mutually exclusive");
  if (!s.finesse && !s.t_in)
    throw ConfigError("section 'cavity': need either finesse or t_in");
  if (auto c = r.get_curvature("r1_m")) s.r1 = *c;
  if (auto c = r.get_curvature("r2_m")) s.r2 = *c;
  return s;
}

LaserSection read_laser(SectionReader& r) {
  LaserSection s;
  s.wavelength_m = r.require_number("wavelength_m");
  s.power_in_w = r.get_number("power_in_w");
  s.p_circ_w = r.get_number("p_circ_w");
  if (s.power_in_w && s.p_circ_w)
    throw ConfigError(
        "section 'laser': power_in_w and p_circ_w are mutually exclusive");
  if (!s.power_in_w && !s.p_circ_w)
    throw ConfigError("section 'laser': need either power_in_w or p_circ_w");
  if (auto d = r.get_number("detuning_hz")) s.detuning_hz = *d;
  if (auto e = r.get_number("efficiency")) s.efficiency = *e;
  return s;
}

EnvironmentSection read_environment(SectionReader& r) {
  EnvironmentSection s;
  s.pressure_pa = r.require_number("pressure_pa");
  if (auto g = r.get_string("gas")) {
    s.gas = *g;
    if (!gas_molecule_mass(*g))
      fail(r.line_of("gas"), "unknown gas '" + *g + "'");
  }
  s.gas_mass_kg = r.get_number("gas_mass_kg");
  if (auto c = r.get_number("shape_c")) s.shape_c = *c;
  if (auto a = r.get_string("area_m2")) {
    if (*a != "auto") s.area_m2 = r.get_number("area_m2");
  }
  s.mirror_radius_m = r.get_number("mirror_radius_m");
  s.mirror_thickness_m = r.get_number("mirror_thickness_m");
  if (!s.area_m2 && (!s.mirror_radius_m || !s.mirror_thickness_m))
    throw ConfigError(
        "section 'environment': area_m2 = auto needs mirror_radius_m and "
        "mirror_thickness_m");
  return s;
}

SuspensionSection read_suspension(SectionReader& r) {
  auto name = r.get_string("material");
  if (!name)
    throw ConfigError("section 'suspension': missing required key 'material'");

  WireMaterial material;
  if (*name == "custom") {
    material.name = "custom";
    material.youngs_modulus = r.require_number("e_pa");
    material.density = r.require_number("rho_kgm3");
    material.tensile_strength = r.require_number("h_pa");
    material.poisson_ratio = r.require_number("nu");
    material.thermal_expansion = r.require_number("alpha_1k");
    material.specific_heat = r.require_number("c_jkgk");
    material.thermal_conductivity = r.require_number("kappa_wmk");
    material.q_intrinsic = 0.0;
    if (material.youngs_modulus <= 0.0 || material.density <= 0.0 ||
        material.tensile_strength <= 0.0 || material.thermal_expansion <= 0.0 ||
        material.specific_heat <= 0.0 || material.thermal_conductivity <= 0.0)
      throw ConfigError("section 'suspension': material constants must be positive");
    if (material.poisson_ratio <= -1.0 || material.poisson_ratio >= 0.5)
      throw ConfigError("section 'suspension': nu must lie in (-1, 0.5)");
  } else if (auto preset = WireMaterial::by_name(*name)) {
    material = *preset;
  } else {
    fail(r.line_of("material"), "unknown material '" + *name + "'");
  }
  if (auto q = r.get_number("q_el")) {
    material.q_intrinsic = *q;
    material.q_surface_coeff = 0.0;
  }
  if (auto c = r.get_number("q_el_surface_per_m")) {
    material.q_surface_coeff = *c;
  }
  if (material.q_intrinsic <= 0.0 && material.q_surface_coeff <= 0.0)
    throw ConfigError(
        "section 'suspension': custom material needs q_el or q_el_surface_per_m");

  SuspensionSection s{material, 0.0, 0.0, 1, 3.0, 0.0, false};
  s.r_w_m = r.require_number("r_w_m");
  s.l_w_m = r.require_number("l_w_m");
  if (auto n = r.get_number("n_w")) {
    if (*n < 1.0 || *n != std::floor(*n))
      fail(r.line_of("n_w"), "n_w must be a positive integer");
    s.n_w = static_cast<int>(*n);
  }
  if (auto v = r.get_number("s_w")) s.s_w = *v;
  if (auto v = r.get_number("bond_loss")) s.bond_loss = *v;
  if (auto v = r.get_bool("thermoelastic_nulled")) s.thermoelastic_nulled = *v;
  return s;
}

TorsionSection read_torsion(SectionReader& r) {
  TorsionSection s;
  s.d_m = r.require_number("d_m");
  if (auto a = r.get_number("a")) s.a = *a;
  return s;
}

LevitationSection read_levitation(SectionReader& r) {
  LevitationSection s;
  if (auto e = r.get_bool("enabled")) s.enabled = *e;
  return s;
}

EffectiveSection read_effective(SectionReader& r) {
  EffectiveSection s;
  s.f_eff_hz = r.require_number("f_eff_hz");
  s.q_eff = r.get_number("q_eff");
  return s;
}

UpperCavitySection read_upper_cavity(SectionReader& r) {
  UpperCavitySection s;
  s.length_m = r.require_number("length_m");
  if (auto p = r.get_number("p_circ_w")) s.p_circ_w = *p;
  if (auto d = r.get_number("detuning_hz")) s.detuning_hz = *d;
  if (auto c = r.get_curvature("r1_m")) s.r1 = *c;
  if (auto c = r.get_curvature("r2_m")) s.r2 = *c;
  return s;
}

void emit_curvature(std::ostringstream& out, const char* key,
                    const Curvature& c) {
  out << key << " = ";
  if (c.is_flat()) out << "flat";
  else out << format_sci(c.radius());
  out << '\n';
}

}  // namespace

double EnvironmentSection::molecule_mass() const {
  if (gas_mass_kg) return *gas_mass_kg;
  return *gas_molecule_mass(gas);
}

double EnvironmentSection::area() const {
  if (area_m2) return *area_m2;
  return cylinder_area(*mirror_radius_m, *mirror_thickness_m);
}

SystemConfig parse_config(std::string_view text) {
  Sections sections = tokenize(text);
  SystemConfig config;
  for (auto& [name, entries] : sections) {
    SectionReader reader(name, entries);
    if (name == "oscillator") config.oscillator = read_oscillator(reader);
    else if (name == "cavity") config.cavity = read_cavity(reader);
    else if (name == "laser") config.laser = read_laser(reader);
    else if (name == "environment") config.environment = read_environment(reader);
    else if (name == "suspension") config.suspension = read_suspension(reader);
    else if (name == "torsion") config.torsion = read_torsion(reader);
    else if (name == "levitation") config.levitation = read_levitation(reader);
    else if (name == "effective") config.effective = read_effective(reader);
    else if (name == "upper_cavity") config.upper_cavity = read_upper_cavity(reader);
    reader.finish();
  }
  return config;
}

SystemConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const SystemConfig& config) {
  std::ostringstream out;
  auto num = [](double v) { return format_sci(v); };

  if (config.oscillator) {
    const auto& s = *config.oscillator;
    out << "[oscillator]\n";
    out << "mass_kg = " << num(s.mass_kg) << '\n';
    out << "f_m_hz = " << num(s.f_m_hz) << '\n';
    out << "q = " << num(s.q) << '\n';
    out << "damping = "
        << (s.damping == DampingModel::viscous ? "viscous" : "structure") << '\n';
    out << "temperature_k = " << num(s.temperature_k) << "\n\n";
  }
  if (config.cavity) {
    const auto& s = *config.cavity;
    out << "[cavity]\n";
    out << "length_m = " << num(s.length_m) << '\n';
    if (s.finesse) out << "finesse = " << num(*s.finesse) << '\n';
    if (s.t_in) {
      out << "t_in = " << num(*s.t_in) << '\n';
      out << "extra_loss = " << num(s.extra_loss) << '\n';
    }
    emit_curvature(out, "r1_m", s.r1);
    emit_curvature(out, "r2_m", s.r2);
    out << '\n';
  }
  if (config.laser) {
    const auto& s = *config.laser;
    out << "[laser]\n";
    out << "wavelength_m = " << num(s.wavelength_m) << '\n';
    if (s.power_in_w) out << "power_in_w = " << num(*s.power_in_w) << '\n';
    if (s.p_circ_w) out << "p_circ_w = " << num(*s.p_circ_w) << '\n';
    out << "detuning_hz = " << num(s.detuning_hz) << '\n';
    out << "efficiency = " << num(s.efficiency) << "\n\n";
  }
  if (config.environment) {
    const auto& s = *config.environment;
    out << "[environment]\n";
    out << "pressure_pa = " << num(s.pressure_pa) << '\n';
    out << "gas = " << s.gas << '\n';
    if (s.gas_mass_kg) out << "gas_mass_kg = " << num(*s.gas_mass_kg) << '\n';
    out << "shape_c = " << num(s.shape_c) << '\n';
    if (s.area_m2) out << "area_m2 = " << num(*s.area_m2) << '\n';
    else out << "area_m2 = auto\n";
    if (s.mirror_radius_m)
      out << "mirror_radius_m = " << num(*s.mirror_radius_m) << '\n';
    if (s.mirror_thickness_m)
      out << "mirror_thickness_m = " << num(*s.mirror_thickness_m) << '\n';
    out << '\n';
  }
  if (config.suspension) {
    const auto& s = *config.suspension;
    out << "[suspension]\n";
    const auto& m = s.material;
    if (m.name == "custom") {
      out << "material = custom\n";
      out << "e_pa = " << num(m.youngs_modulus) << '\n';
      out << "rho_kgm3 = " << num(m.density) << '\n';
      out << "h_pa = " << num(m.tensile_strength) << '\n';
      out << "nu = " << num(m.poisson_ratio) << '\n';
      out << "alpha_1k = " << num(m.thermal_expansion) << '\n';
      out << "c_jkgk = " << num(m.specific_heat) << '\n';
      out << "kappa_wmk = " << num(m.thermal_conductivity) << '\n';
    } else {
      out << "material = " << m.name << '\n';
    }
    if (m.q_surface_coeff > 0.0)
      out << "q_el_surface_per_m = " << num(m.q_surface_coeff) << '\n';
    else
      out << "q_el = " << num(m.q_intrinsic) << '\n';
    out << "r_w_m = " << num(s.r_w_m) << '\n';
    out << "l_w_m = " << num(s.l_w_m) << '\n';
    out << "n_w = " << s.n_w << '\n';
    out << "s_w = " << num(s.s_w) << '\n';
    out << "bond_loss = " << num(s.bond_loss) << '\n';
    out << "thermoelastic_nulled = "
        << (s.thermoelastic_nulled ? "true" : "false") << "\n\n";
  }
  if (config.torsion) {
    out << "[torsion]\n";
    out << "d_m = " << num(config.torsion->d_m) << '\n';
    out << "a = " << num(config.torsion->a) << "\n\n";
  }
  if (config.levitation) {
    out << "[levitation]\n";
    out << "enabled = " << (config.levitation->enabled ? "true" : "false")
        << "\n\n";
  }
  if (config.effective) {
    out << "[effective]\n";
    out << "f_eff_hz = " << num(config.effective->f_eff_hz) << '\n';
    if (config.effective->q_eff)
      out << "q_eff = " << num(*config.effective->q_eff) << '\n';
    out << '\n';
  }
  if (config.upper_cavity) {
    const auto& s = *config.upper_cavity;
    out << "[upper_cavity]\n";
    out << "length_m = " << num(s.length_m) << '\n';
    out << "p_circ_w = " << num(s.p_circ_w) << '\n';
    out << "detuning_hz = " << num(s.detuning_hz) << '\n';
    emit_curvature(out, "r1_m", s.r1);
    emit_curvature(out, "r2_m", s.r2);
    out << '\n';
  }
  return out.str();
}

AssembledSystem build_system(const SystemConfig& config) {
  if (!config.oscillator || !config.cavity || !config.laser)
    throw ConfigError("system assembly needs [oscillator], [cavity] and [laser]");

  const auto& o = *config.oscillator;
  MechanicalOscillator osc(o.mass_kg, constants::two_pi * o.f_m_hz, o.q,
                           o.damping, o.temperature_k);

  const auto& cs = *config.cavity;
  std::optional<OpticalCavity> geometry;
  CavityResponse resp{};
  if (cs.t_in) {
    geometry = OpticalCavity(cs.length_m, *cs.t_in, cs.extra_loss, cs.r1, cs.r2);
    resp = cavity_response(*geometry);
  } else {
    resp = response_from_finesse(cs.length_m, *cs.finesse);
  }

  const auto& ls = *config.laser;
  LaserDrive drive(ls.wavelength_m, ls.power_in_w.value_or(0.0),
                   constants::two_pi * ls.detuning_hz, ls.efficiency);

  const double p_circ =
      ls.p_circ_w ? *ls.p_circ_w : circulating_power(resp, drive);

  AssembledSystem sys{osc,
                      resp,
                      geometry,
                      drive,
                      cs.length_m,
                      p_circ,
                      coupling_params(osc, cs.length_m, ls.wavelength_m, p_circ)};
  return sys;
}

}  // namespace mgom
