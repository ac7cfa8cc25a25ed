// Command-line front end: batch verifications and computations with
// machine-readable (--json) output and stable exit codes:
//   0 value/pass, 2 input error, 3 domain-validation error, 4 resource guard.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "spinrep/clifford.hpp"
#include "spinrep/cohomology.hpp"
#include "spinrep/extension.hpp"
#include "spinrep/group.hpp"
#include "spinrep/minkowski.hpp"
#include "spinrep/quaternion.hpp"
#include "spinrep/representation.hpp"
#include "spinrep/rotation.hpp"
#include "spinrep/spincover.hpp"

using json = nlohmann::ordered_json;
using namespace spinrep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;

struct Options {
    bool json_output = false;
    bool degrees = false;
    double tolerance = 1e-9;
    bool tolerance_given = false;
};

void emit(const Options& opt, const json& doc, const std::string& human) {
    if (opt.json_output) {
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << human;
    }
}

Eigen::Vector3d parse_axis(const std::string& token) {
    if (token == "e1") return Eigen::Vector3d::UnitX();
    if (token == "e2") return Eigen::Vector3d::UnitY();
    if (token == "e3") return Eigen::Vector3d::UnitZ();
    Eigen::Vector3d v;
    int consumed = -1;
    if (std::sscanf(token.c_str(), "%lf,%lf,%lf%n", &v.x(), &v.y(), &v.z(), &consumed) != 3 ||
        consumed != static_cast<int>(token.size())) {
        throw ParseError("cannot parse axis '" + token + "' (want e1|e2|e3 or x,y,z)");
    }
    return v;
}

double to_radians(const Options& opt, double angle) {
    return opt.degrees ? angle * M_PI / 180.0 : angle;
}

json vec3_json(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

json quat_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

int cmd_compose(const Options& opt, const std::vector<std::string>& args) {
    const AxisAngle p(parse_axis(args[0]), to_radians(opt, std::stod(args[1])));
    const AxisAngle q(parse_axis(args[2]), to_radians(opt, std::stod(args[3])));
    const AxisAngle result = compose(p, q);
    const double residual =
        (rodrigues(result) - rodrigues(p) * rodrigues(q)).cwiseAbs().maxCoeff();

    json doc;
    doc["command"] = "compose";
    doc["status"] = residual <= opt.tolerance ? "value" : "fail";
    doc["angle"] = result.angle;
    doc["axis"] = vec3_json(result.axis);
    doc["residual"] = residual;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "angle = %.12g\naxis  = (%.12g, %.12g, %.12g)\nresidual = %.3g\n",
                  result.angle, result.axis.x(), result.axis.y(), result.axis.z(), residual);
    emit(opt, doc, buf);
    return residual <= opt.tolerance ? kExitOk : kExitDomain;
}

int cmd_lift(const Options& opt, const std::vector<std::string>& args) {
    RotationMatrix3 r;
    for (int i = 0; i < 9; ++i) r(i / 3, i % 3) = std::stod(args[i]);
    // validation threshold defaults to the module's 1e-6 contract
    const double validation = opt.tolerance_given ? opt.tolerance : 1e-6;
    const auto pre = lift(r, validation);  // throws NotARotation -> exit 3
    const double residual = std::max(
        (psi_prime(pre.first) - r).cwiseAbs().maxCoeff(),
        (psi_prime(pre.second) - r).cwiseAbs().maxCoeff());

    json doc;
    doc["command"] = "lift";
    doc["status"] = "value";
    doc["first"] = quat_json(pre.first.value());
    doc["second"] = quat_json(pre.second.value());
    doc["residual"] = residual;
    const Quaternion& u = pre.first.value();
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "u  = (%.12g, %.12g, %.12g, %.12g)\n-u = (%.12g, %.12g, %.12g, %.12g)\n",
                  u.w, u.x, u.y, u.z, -u.w, -u.x, -u.y, -u.z);
    emit(opt, doc, buf);
    return kExitOk;
}

int cmd_dirac(const Options& opt, double kappa) {
    if (!(kappa > 0.0)) throw NonpositiveMass("dirac: --kappa must be positive");
    const CliffordReport cliff = clifford_check(GammaSystem::standard());
    const FactorizationReport kg = kg_factorization_check(kappa);
    const bool pass = cliff.pass && kg.pass;

    json doc;
    doc["command"] = "dirac";
    doc["status"] = pass ? "pass" : "fail";
    doc["kappa"] = kappa;
    doc["anticommutator_deviation"] = cliff.max_deviation;
    doc["factorization_deviation"] = kg.max_deviation;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%s\nanticommutator deviation = %.3g\nfactorization deviation = %.3g\n",
                  pass ? "pass" : "fail", cliff.max_deviation, kg.max_deviation);
    emit(opt, doc, buf);
    return kExitOk;
}

int cmd_schur(const Options& opt, const std::string& name, const std::string& file) {
    const auto start = std::chrono::steady_clock::now();
    const FiniteGroup g = file.empty() ? builtin_group(name) : load_group_from_file(file);
    const AbelianInvariants inv = schur_multiplier(g);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json doc;
    doc["command"] = "schur";
    doc["status"] = "value";
    doc["group"] = file.empty() ? name : file;
    doc["order"] = g.order();
    doc["invariants"] = inv;

    std::string human = "multiplier: ";
    if (inv.empty()) {
        human += "trivial";
    } else {
        for (size_t i = 0; i < inv.size(); ++i) {
            human += (i ? " x Z/" : "Z/") + std::to_string(inv[i]);
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "  (%.3f s)\n", elapsed);
    emit(opt, doc, human + buf);
    return kExitOk;
}

int cmd_clifford(const Options& opt, const std::string& case_name) {
    std::string group_name, rep_name;
    if (case_name == "D4-center") {
        group_name = "D4";
        rep_name = "D4-2dim";
    } else if (case_name == "Q8-center") {
        group_name = "Q8";
        rep_name = "Q8-2dim";
    } else {
        throw ParseError("unknown clifford case '" + case_name +
                         "' (want D4-center or Q8-center)");
    }
    const FiniteGroup h = builtin_group(group_name);
    const MatrixRep tau = builtin_representation(rep_name);
    const std::vector<int> n = center(h);

    const IsotypicRestriction res = restrict_isotypic(h, n, tau);
    if (!res.isotypic) throw DecompositionFailed("clifford: restriction is not isotypic");
    const CliffordDecomposition dec =
        clifford_decompose(h, n, tau, res.rho, res.multiplicity);

    const FactorSet descended = descend_factor_set(dec.gamma_factor_set, dec.quotient);
    const bool nontrivial =
        !factor_set_class_trivial_abelian(dec.quotient.group, descended, 1e-8);
    const double worst = std::max({dec.reconstruction_residual, dec.factor_product_residual,
                                   dec.coset_constancy_residual});

    json doc;
    doc["command"] = "clifford";
    doc["status"] = worst <= 1e-8 ? "pass" : "fail";
    doc["case"] = case_name;
    doc["multiplicity"] = res.multiplicity;
    doc["dim_gamma"] = dec.gamma.dim;
    doc["dim_c"] = dec.c.dim;
    doc["reconstruction_residual"] = dec.reconstruction_residual;
    doc["factor_product_residual"] = dec.factor_product_residual;
    doc["coset_constancy_residual"] = dec.coset_constancy_residual;
    doc["gamma_class_nontrivial"] = nontrivial;
    char buf[384];
    std::snprintf(buf, sizeof(buf),
                  "%s\nell = %d, dim Gamma = %d, dim C = %d\nreconstruction residual = %.3g\n"
                  "factor product residual = %.3g\nGamma class nontrivial: %s\n",
                  worst <= 1e-8 ? "pass" : "fail", res.multiplicity, dec.gamma.dim, dec.c.dim,
                  dec.reconstruction_residual, dec.factor_product_residual,
                  nontrivial ? "yes" : "no");
    emit(opt, doc, buf);
    return kExitOk;
}

int cmd_weights(const Options& opt, const std::string& rep) {
    Eigen::MatrixXcd generator;
    if (rep == "pi2") {
        generator = su2_generator(3);
    } else if (rep.rfind("pi2-tensor-", 0) == 0) {
        const std::string suffix = rep.substr(11);
        int k = 0;
        try {
            size_t used = 0;
            k = std::stoi(suffix, &used);
            if (used != suffix.size()) throw std::invalid_argument(suffix);
        } catch (const std::exception&) {
            throw ParseError("cannot parse tensor power in '" + rep + "'");
        }
        if (k < 1 || k > 6) throw ParseError("tensor power must be in 1..6");
        generator = pi2_tensor_power_generator(k);
    } else {
        throw ParseError("unknown representation '" + rep + "' (want pi2 or pi2-tensor-k)");
    }
    const WeightList w = weights_from_torus_generator(generator);

    json doc;
    doc["command"] = "weights";
    doc["status"] = "value";
    doc["rep"] = rep;
    doc["weights"] = w.weights;
    doc["highest"] = w.highest();
    std::string human = "weights:";
    for (double k : w.weights) human += " " + std::to_string(k);
    human += "\nhighest: " + std::to_string(w.highest()) + "\n";
    emit(opt, doc, human);
    return kExitOk;
}

void emit_error(const Options& opt, const std::string& command, const std::string& kind,
                const std::string& message) {
    json doc;
    doc["command"] = command;
    doc["status"] = "error";
    doc["error"] = kind;
    doc["message"] = message;
    if (opt.json_output) {
        std::cout << doc.dump() << "\n";
    } else {
        std::cerr << "error (" << kind << "): " << message << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion / spin representation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_flag("--json", opt.json_output, "machine-readable output");
    app.add_flag("--degrees", opt.degrees, "interpret input angles as degrees");
    auto* tol_opt =
        app.add_option("--tolerance", opt.tolerance, "geometric residual tolerance (default 1e-9)");

    std::vector<std::string> compose_args;
    auto* compose_cmd = app.add_subcommand("compose", "compose two axis-angle rotations");
    compose_cmd->add_option("args", compose_args, "AXIS1 ANGLE1 AXIS2 ANGLE2")->expected(4);

    std::vector<std::string> lift_args;
    auto* lift_cmd = app.add_subcommand("lift", "both unit-quaternion preimages of a rotation");
    lift_cmd->add_option("entries", lift_args, "nine row-major matrix entries")->expected(9);

    double kappa = 1.0;
    auto* dirac_cmd = app.add_subcommand("dirac", "gamma relations and wave-operator factorization");
    dirac_cmd->add_option("--kappa", kappa, "mass parameter (> 0)")->required();

    std::string schur_name, schur_file;
    auto* schur_cmd = app.add_subcommand("schur", "Schur multiplier of a finite group");
    schur_cmd->add_option("group", schur_name, "builtin group name");
    schur_cmd->add_option("--file", schur_file, "group table document");

    std::string clifford_case;
    auto* clifford_cmd = app.add_subcommand("clifford", "tensor decomposition over a normal subgroup");
    clifford_cmd->add_option("case", clifford_case, "D4-center or Q8-center")->required();

    std::string weights_rep;
    auto* weights_cmd = app.add_subcommand("weights", "weight multiset of a representation");
    weights_cmd->add_option("--rep", weights_rep, "pi2 or pi2-tensor-k (k <= 6)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }
    opt.tolerance_given = tol_opt->count() > 0;

    std::string command = "?";
    try {
        if (compose_cmd->parsed()) {
            command = "compose";
            return cmd_compose(opt, compose_args);
        }
        if (lift_cmd->parsed()) {
            command = "lift";
            return cmd_lift(opt, lift_args);
        }
        if (dirac_cmd->parsed()) {
            command = "dirac";
            return cmd_dirac(opt, kappa);
        }
        if (schur_cmd->parsed()) {
            command = "schur";
            if (schur_name.empty() == schur_file.empty()) {
                throw ParseError("schur: give exactly one of a group name or --file");
            }
            return cmd_schur(opt, schur_name, schur_file);
        }
        if (clifford_cmd->parsed()) {
            command = "clifford";
            return cmd_clifford(opt, clifford_case);
        }
        if (weights_cmd->parsed()) {
            command = "weights";
            return cmd_weights(opt, weights_rep);
        }
    } catch (const ParseError& e) {
        emit_error(opt, command, "parse", e.what());
        return kExitInput;
    } catch (const UnknownGroup& e) {
        emit_error(opt, command, "unknown-name", e.what());
        return kExitInput;
    } catch (const NonpositiveMass& e) {
        emit_error(opt, command, "bad-parameter", e.what());
        return kExitInput;
    } catch (const NearZeroQuaternion& e) {
        emit_error(opt, command, "degenerate-input", e.what());
        return kExitInput;
    } catch (const BadIndex& e) {
        emit_error(opt, command, "bad-parameter", e.what());
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        emit_error(opt, command, "parse", e.what());
        return kExitInput;
    } catch (const TooLarge& e) {
        emit_error(opt, command, "resource-guard", e.what());
        return kExitResource;
    } catch (const NotARotation& e) {
        emit_error(opt, command, "not-a-rotation", e.what());
        return kExitDomain;
    } catch (const NotAGroup& e) {
        emit_error(opt, command, "not-a-group", e.what());
        return kExitDomain;
    } catch (const Error& e) {
        emit_error(opt, command, "domain", e.what());
        return kExitDomain;
    } catch (const std::exception& e) {
        emit_error(opt, command, "parse", e.what());
        return kExitInput;
    }
    return kExitInput;
}
