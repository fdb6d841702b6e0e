#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mgom/cavity.hpp"
#include "mgom/config.hpp"
#include "mgom/constants.hpp"
#include "mgom/coupling.hpp"
#include "mgom/criteria.hpp"
#include "mgom/langevin.hpp"
#include "mgom/levitation.hpp"
#include "mgom/mechanics.hpp"
#include "mgom/quantum_noise.hpp"
#include "mgom/suspension.hpp"
#include "mgom/torsion.hpp"
#include "mgom/types.hpp"

namespace py = pybind11;
using namespace mgom;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Noise budgets and design checks for milligram-scale "
            "optomechanical systems";

  auto constants_mod = m.def_submodule("constants");
  constants_mod.attr("hbar") = constants::hbar;
  constants_mod.attr("planck") = constants::planck;
  constants_mod.attr("boltzmann") = constants::boltzmann;
  constants_mod.attr("speed_of_light") = constants::speed_of_light;
  constants_mod.attr("standard_gravity") = constants::standard_gravity;

  py::enum_<DampingModel>(m, "DampingModel")
      .value("viscous", DampingModel::viscous)
      .value("structure", DampingModel::structure);

  py::class_<MechanicalOscillator>(m, "MechanicalOscillator")
      .def(py::init<double, double, double, DampingModel, double>(),
           py::arg("mass"), py::arg("omega_m"), py::arg("quality"),
           py::arg("model") = DampingModel::viscous,
           py::arg("temperature") = 0.0)
      .def_readonly("mass", &MechanicalOscillator::mass)
      .def_readonly("omega_m", &MechanicalOscillator::omega_m)
      .def_readonly("quality", &MechanicalOscillator::quality)
      .def_readonly("model", &MechanicalOscillator::model)
      .def_readonly("temperature", &MechanicalOscillator::temperature)
      .def("damping_rate", &MechanicalOscillator::damping_rate)
      .def("thermal_occupancy", &MechanicalOscillator::thermal_occupancy);

  py::class_<Curvature>(m, "Curvature")
      .def_static("flat", &Curvature::flat)
      .def_static("finite", &Curvature::finite)
      .def("is_flat", &Curvature::is_flat)
      .def("g_factor", &Curvature::g_factor);

  py::class_<OpticalCavity>(m, "OpticalCavity")
      .def(py::init<double, double, double, Curvature, Curvature>(),
           py::arg("length"), py::arg("input_transmission"),
           py::arg("extra_loss"), py::arg("r1"), py::arg("r2"))
      .def_readonly("length", &OpticalCavity::length)
      .def("g1", &OpticalCavity::g1)
      .def("g2", &OpticalCavity::g2);

  py::class_<LaserDrive>(m, "LaserDrive")
      .def(py::init<double, double, double, double>(), py::arg("wavelength"),
           py::arg("input_power"), py::arg("detuning") = 0.0,
           py::arg("efficiency") = 1.0)
      .def_readonly("wavelength", &LaserDrive::wavelength)
      .def_readonly("detuning", &LaserDrive::detuning)
      .def_readonly("efficiency", &LaserDrive::efficiency)
      .def("omega_laser", &LaserDrive::omega_laser);

  py::class_<Environment>(m, "Environment")
      .def(py::init<double, double, double, double>(), py::arg("pressure"),
           py::arg("molecule_mass"), py::arg("shape_constant"),
           py::arg("exposed_area"));

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("violations", &ValidationReport::violations)
      .def_readonly("warnings", &ValidationReport::warnings)
      .def("ok", &ValidationReport::ok);
  m.def("validate_system", &validate_system);

  // mechanics
  m.def("susceptibility", &susceptibility);
  m.def("thermal_force_psd", &thermal_force_psd);
  m.def("thermal_displacement_psd", &thermal_displacement_psd);
  m.def("thermal_decoherence_rate", &thermal_decoherence_rate);
  m.def("phonon_reheating", &phonon_reheating);
  m.def("zero_point_fluctuation", &zero_point_fluctuation);

  // cavity
  py::enum_<CouplingRegime>(m, "CouplingRegime")
      .value("over", CouplingRegime::over)
      .value("critical", CouplingRegime::critical)
      .value("under", CouplingRegime::under);
  py::class_<CavityResponse>(m, "CavityResponse")
      .def_readonly("omega_fsr", &CavityResponse::omega_fsr)
      .def_readonly("finesse", &CavityResponse::finesse)
      .def_readonly("kappa", &CavityResponse::kappa)
      .def_readonly("kappa_in", &CavityResponse::kappa_in)
      .def_readonly("regime", &CavityResponse::regime);
  m.def("cavity_response", &cavity_response);
  m.def("response_from_finesse", &response_from_finesse);
  m.def("circulating_power", &circulating_power);
  m.def("intracavity_photon_number", &intracavity_photon_number);

  // coupling
  py::class_<CouplingParams>(m, "CouplingParams")
      .def_readonly("frequency_pull", &CouplingParams::frequency_pull)
      .def_readonly("strength", &CouplingParams::strength)
      .def_readonly("n_circ", &CouplingParams::n_circ)
      .def("g_squared", &CouplingParams::g_squared);
  m.def("coupling_params", &coupling_params);
  py::class_<OpticalSpring>(m, "OpticalSpring")
      .def(py::init<double, double>(), py::arg("delta_omega"), py::arg("gamma"))
      .def_readonly("delta_omega", &OpticalSpring::delta_omega)
      .def_readonly("gamma", &OpticalSpring::gamma);
  m.def("optical_spring_full", &optical_spring_full);
  m.def("optical_spring_doppler", &optical_spring_doppler);
  py::class_<EffectiveDynamics>(m, "EffectiveDynamics")
      .def(py::init([](double w, double g, bool s) {
             return EffectiveDynamics{w, g, s};
           }),
           py::arg("omega_eff"), py::arg("gamma_eff"), py::arg("stable") = true)
      .def_readonly("omega_eff", &EffectiveDynamics::omega_eff)
      .def_readonly("gamma_eff", &EffectiveDynamics::gamma_eff)
      .def_readonly("stable", &EffectiveDynamics::stable);
  m.def("effective_dynamics",
        [](const MechanicalOscillator& osc, const std::vector<OpticalSpring>& s) {
          return effective_dynamics(osc, s);
        });
  m.def("minimum_phonon_doppler", &minimum_phonon_doppler);
  py::enum_<MovableMirror>(m, "MovableMirror")
      .value("mirror1", MovableMirror::mirror1)
      .value("mirror2", MovableMirror::mirror2);
  m.def("sidles_sigg_stiffness", &sidles_sigg_stiffness, py::arg("cavity"),
        py::arg("p_circ"), py::arg("which") = MovableMirror::mirror2);

  // quantum noise
  py::enum_<MassConvention>(m, "MassConvention")
      .value("single_cavity", MassConvention::single_cavity)
      .value("michelson", MassConvention::michelson);
  py::class_<QuantumNoiseInput>(m, "QuantumNoiseInput")
      .def_readonly("mode", &QuantumNoiseInput::mode)
      .def_readonly("frequency_pull", &QuantumNoiseInput::frequency_pull)
      .def_readonly("n_circ", &QuantumNoiseInput::n_circ)
      .def_readonly("kappa", &QuantumNoiseInput::kappa)
      .def_readonly("eta", &QuantumNoiseInput::eta);
  m.def("quantum_noise_input", &quantum_noise_input, py::arg("osc"),
        py::arg("coupling"), py::arg("resp"), py::arg("eta") = 1.0,
        py::arg("convention") = MassConvention::single_cavity);
  m.def("kappa_factor", &kappa_factor);
  m.def("sql_displacement_psd", &sql_displacement_psd);
  m.def("shot_noise_psd", &shot_noise_psd);
  m.def("radiation_pressure_psd", &radiation_pressure_psd);
  m.def("quantum_noise_displacement_psd", &quantum_noise_displacement_psd);
  m.def("displacement_to_force_psd", &displacement_to_force_psd);
  py::class_<SqlFrequency>(m, "SqlFrequency")
      .def_readonly("omega", &SqlFrequency::omega)
      .def_readonly("free_mass_ok", &SqlFrequency::free_mass_ok)
      .def_readonly("cavity_pole_ok", &SqlFrequency::cavity_pole_ok);
  m.def("sql_touching_frequency", &sql_touching_frequency);
  py::class_<MechanismSet>(m, "MechanismSet")
      .def(py::init<>())
      .def_readwrite("shot", &MechanismSet::shot)
      .def_readwrite("radiation_pressure", &MechanismSet::radiation_pressure)
      .def_readwrite("thermal", &MechanismSet::thermal);
  py::class_<FrequencyGrid>(m, "FrequencyGrid")
      .def_static("log_spaced_hz", &FrequencyGrid::log_spaced_hz)
      .def_static("from_angular", &FrequencyGrid::from_angular)
      .def_readonly("omega", &FrequencyGrid::omega);
  py::class_<NoiseBudget>(m, "NoiseBudget")
      .def_readonly("displacement", &NoiseBudget::displacement)
      .def_readonly("force", &NoiseBudget::force)
      .def_readonly("metadata", &NoiseBudget::metadata)
      .def_property_readonly("omega",
                             [](const NoiseBudget& b) { return b.grid.omega; });
  m.def("build_budget", &build_budget, py::arg("osc"), py::arg("input"),
        py::arg("grid"), py::arg("mechanisms"), py::arg("detuning") = 0.0);

  // criteria
  py::class_<Cooperativity>(m, "Cooperativity")
      .def_readonly("c", &Cooperativity::c)
      .def_readonly("c_qu", &Cooperativity::c_qu)
      .def_readonly("unbounded", &Cooperativity::unbounded);
  m.def("cooperativity", &cooperativity);
  m.def("measurement_rate", &measurement_rate);
  m.def("measurement_rate_sufficient", &measurement_rate_sufficient);
  py::class_<FqReport>(m, "FqReport")
      .def_readonly("product_hz", &FqReport::product_hz)
      .def_readonly("threshold_hz", &FqReport::threshold_hz)
      .def_readonly("margin", &FqReport::margin)
      .def_readonly("alpha", &FqReport::alpha)
      .def_readonly("effective_product_hz", &FqReport::effective_product_hz)
      .def_readonly("passed", &FqReport::pass);
  m.def("fq_criterion", &fq_criterion);
  m.def("fq_product_check", &fq_product_check);
  py::class_<Occupancy>(m, "Occupancy")
      .def_readonly("n_eff", &Occupancy::n_eff)
      .def_readonly("overdamped", &Occupancy::overdamped);
  m.def("effective_occupancy", &effective_occupancy);

  // suspension design
  py::class_<WireMaterial>(m, "WireMaterial")
      .def_static("fused_silica", &WireMaterial::fused_silica)
      .def_static("tungsten", &WireMaterial::tungsten)
      .def_static("silicon", &WireMaterial::silicon)
      .def_static("sapphire", &WireMaterial::sapphire)
      .def_static("carbon_fiber", &WireMaterial::carbon_fiber)
      .def_readwrite("name", &WireMaterial::name)
      .def_readwrite("youngs_modulus", &WireMaterial::youngs_modulus)
      .def_readwrite("density", &WireMaterial::density)
      .def_readwrite("tensile_strength", &WireMaterial::tensile_strength)
      .def_readwrite("poisson_ratio", &WireMaterial::poisson_ratio)
      .def_readwrite("thermal_expansion", &WireMaterial::thermal_expansion)
      .def_readwrite("specific_heat", &WireMaterial::specific_heat)
      .def_readwrite("thermal_conductivity", &WireMaterial::thermal_conductivity)
      .def_readwrite("q_intrinsic", &WireMaterial::q_intrinsic)
      .def_readwrite("q_surface_coeff", &WireMaterial::q_surface_coeff)
      .def("q_el", &WireMaterial::q_el);
  py::class_<Suspension>(m, "Suspension")
      .def(py::init([](const WireMaterial& mat, double r_w, double l_w, int n_w,
                       double s_w, double bond, bool nulled) {
             return Suspension{mat, r_w, l_w, n_w, s_w, bond, nulled};
           }),
           py::arg("material"), py::arg("r_w"), py::arg("l_w"),
           py::arg("n_w") = 1, py::arg("safety_factor") = 3.0,
           py::arg("bond_loss_angle") = 0.0,
           py::arg("thermoelastic_nulled") = false)
      .def_readwrite("r_w", &Suspension::r_w)
      .def_readwrite("l_w", &Suspension::l_w)
      .def_readwrite("n_w", &Suspension::n_w)
      .def_readwrite("safety_factor", &Suspension::safety_factor)
      .def_readwrite("bond_loss_angle", &Suspension::bond_loss_angle)
      .def("tension", &Suspension::tension);
  py::class_<PendulumSprings>(m, "PendulumSprings")
      .def_readonly("k_grav", &PendulumSprings::k_grav)
      .def_readonly("k_el", &PendulumSprings::k_el)
      .def_readonly("dilution", &PendulumSprings::dilution)
      .def_readonly("q_pendulum", &PendulumSprings::q_pendulum)
      .def_readonly("omega_m", &PendulumSprings::omega_m);
  m.def("pendulum_springs", &pendulum_springs);
  m.def("violin_frequency", &violin_frequency);
  py::class_<DesignConstraints>(m, "DesignConstraints")
      .def(py::init([](double f_v, double s_w, int n_w, double r_min) {
             return DesignConstraints{f_v, s_w, n_w, r_min};
           }),
           py::arg("f_v_min_hz"), py::arg("safety_factor") = 3.0,
           py::arg("n_w") = 1, py::arg("r_w_min") = 0.0);
  py::class_<MaxQDesign>(m, "MaxQDesign")
      .def_readonly("suspension", &MaxQDesign::suspension)
      .def_readonly("springs", &MaxQDesign::springs)
      .def_readonly("violin_hz", &MaxQDesign::violin_hz)
      .def_readonly("q", &MaxQDesign::q)
      .def_readonly("tensile_bound_active", &MaxQDesign::tensile_bound_active);
  m.def("max_q_design", &max_q_design);
  m.def("thermoelastic_loss", &thermoelastic_loss);
  m.def("thermoelastic_relaxation_time", &thermoelastic_relaxation_time);
  m.def("gas_damping", &gas_damping);
  py::class_<DampingBreakdown>(m, "DampingBreakdown")
      .def_readonly("omega_m", &DampingBreakdown::omega_m)
      .def_readonly("gamma_wire", &DampingBreakdown::gamma_wire)
      .def_readonly("gamma_bond", &DampingBreakdown::gamma_bond)
      .def_readonly("gamma_thermoelastic", &DampingBreakdown::gamma_thermoelastic)
      .def_readonly("gamma_gas", &DampingBreakdown::gamma_gas)
      .def("total", &DampingBreakdown::total);
  m.def("total_pendulum_damping", &total_pendulum_damping);
  m.def("gas_molecule_mass", &gas_molecule_mass);
  m.def("cylinder_area", &cylinder_area);

  // torsion
  py::class_<TorsionBar>(m, "TorsionBar")
      .def(py::init<double, double, double>(), py::arg("mass"),
           py::arg("bar_length"), py::arg("mass_factor") = 1.0 / 12.0)
      .def_readonly("mass", &TorsionBar::mass)
      .def_readonly("bar_length", &TorsionBar::bar_length)
      .def_readonly("mass_factor", &TorsionBar::mass_factor)
      .def("inertia", &TorsionBar::inertia);
  m.def("torsion_susceptibility", &torsion_susceptibility);
  m.def("torsion_quantum_noise_input", &torsion_quantum_noise_input);
  m.def("torsion_cooperativity", &torsion_cooperativity);
  m.def("torsion_spring", &torsion_spring);
  m.def("torsion_resonance", &torsion_resonance);
  py::class_<TorsionDampingRatio>(m, "TorsionDampingRatio")
      .def_readonly("geometric", &TorsionDampingRatio::geometric)
      .def_readonly("tensile_form", &TorsionDampingRatio::tensile_form);
  m.def("damping_ratio", &damping_ratio);
  m.def("common_mode_rejection_requirement", &common_mode_rejection_requirement);
  py::class_<OpticalLever>(m, "OpticalLever")
      .def(py::init<double, double>(), py::arg("power"), py::arg("beam_radius"));
  m.def("optical_lever_kappa", &optical_lever_kappa);

  // levitation
  m.def("levitation_power", &levitation_power);
  m.def("levitation_sql_frequency", &levitation_sql_frequency);
  m.def("finesse_bound", &finesse_bound);
  py::enum_<MirrorConvexity>(m, "MirrorConvexity")
      .value("convex_down", MirrorConvexity::convex_down)
      .value("convex_up", MirrorConvexity::convex_up)
      .value("flat", MirrorConvexity::flat);
  py::class_<LevitationCavity>(m, "LevitationCavity")
      .def(py::init([](const OpticalCavity& cav, double p, double d) {
             return LevitationCavity{cav, p, d};
           }),
           py::arg("cavity"), py::arg("p_circ"), py::arg("detuning") = 0.0);
  py::class_<SandwichReport>(m, "SandwichReport")
      .def_readonly("vertical_trapped", &SandwichReport::vertical_trapped)
      .def_readonly("rotational_trapped", &SandwichReport::rotational_trapped)
      .def_readonly("horizontal_trapped", &SandwichReport::horizontal_trapped)
      .def_readonly("notes", &SandwichReport::notes)
      .def("all_trapped", &SandwichReport::all_trapped);
  m.def("sandwich_stability_check", &sandwich_stability_check);

  // time-domain oracle
  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init([](const MechanicalOscillator& osc, double dt,
                       double duration, std::uint64_t seed, double gain,
                       double x0, double v0) {
             return SimConfig{osc, dt, duration, seed, gain, x0, v0};
           }),
           py::arg("osc"), py::arg("dt"), py::arg("duration"),
           py::arg("seed") = 0, py::arg("feedback_gain") = 0.0,
           py::arg("x0") = 0.0, py::arg("v0") = 0.0);
  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("dt", &Trajectory::dt)
      .def_readonly("x", &Trajectory::x)
      .def_readonly("v", &Trajectory::v)
      .def("variance_x", &Trajectory::variance_x, py::arg("skip") = 0);
  m.def("simulate", &simulate);
  py::class_<PsdEstimate>(m, "PsdEstimate")
      .def_readonly("f_hz", &PsdEstimate::f_hz)
      .def_readonly("psd", &PsdEstimate::psd);
  m.def("psd_estimate",
        [](const Trajectory& t, int segments) { return psd_estimate(t, segments); });
  m.def("psd_estimate_series",
        [](const std::vector<double>& x, double dt, int segments) {
          return psd_estimate(x, dt, segments);
        });
  py::class_<ReheatingCurve>(m, "ReheatingCurve")
      .def_readonly("t", &ReheatingCurve::t)
      .def_readonly("occupancy", &ReheatingCurve::occupancy);
  m.def("reheating_experiment", &reheating_experiment);
}
