// Copyright 2026 The skeltrop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skeltrop/cli/commands.hpp"

#include <functional>

#include "skeltrop/json_io.hpp"
#include "skeltrop/trop_map.hpp"

namespace skeltrop::cli {
namespace {

Report run(const std::string& command, const std::function<void(Report&)>& body) {
  Report rep;
  rep.command = command;
  try {
    body(rep);
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::kGenericityViolated ? kExitGenericity : kExitInput;
    rep.error(code, e.what());
  } catch (const std::exception& e) {
    rep.error(kExitInput, e.what());
  }
  return rep;
}

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

// Rejects functions that do not satisfy the PL-function invariants.
bool checked_inputs(Report& rep, const std::vector<std::string>& issues) {
  if (issues.empty()) return true;
  for (const auto& m : issues) rep.findings.push_back({"error", "", m, {}});
  rep.status = Status::kError;
  rep.exit_code = kExitInput;
  return false;
}

std::string cell_of(const FiberPoint& p) {
  return p.piece == 0 ? p.cell : p.cell + "#" + std::to_string(p.piece);
}

}  // namespace

Report cmd_validate(const std::string& complex_path) {
  return run("validate " + complex_path, [&](Report& rep) {
    const auto c = json::complex_from_json(json::read_file(complex_path));
    const auto v = validate(c);
    for (const auto& f : v.violations) rep.findings.push_back({"error", join(f.cells), f.check + ": " + f.message, {}});
    for (const auto& f : v.notes) rep.findings.push_back({"note", join(f.cells), f.check + ": " + f.message, {}});
    rep.findings.push_back({"ok", "", "checked", {{"cells", std::to_string(c.cells().size())},
                                                  {"violations", std::to_string(v.violations.size())}}});
    if (!v.ok()) rep.fail();
  });
}

Report cmd_balance(const BalanceOptions& opt) {
  const std::string mode = opt.mode == BalanceMode::kBounded ? "bounded" : "pair";
  return run("balance --mode " + mode + " " + opt.complex_path + " " + opt.function_path, [&](Report& rep) {
    const auto c = json::complex_from_json(json::read_file(opt.complex_path));
    const auto f = json::pl_function_from_json(json::read_file(opt.function_path));
    if (!checked_inputs(rep, check_pl_function(c, f))) return;
    rep.notes = f.notes;

    BalanceReport br;
    std::optional<CodimOneDivisor> tau;
    if (opt.mode == BalanceMode::kBounded) {
      if (opt.tau_path) tau = json::divisor_from_json(json::read_file(*opt.tau_path));
      br = check_bounded_formula(c, f, tau ? &*tau : nullptr);
    } else {
      br = check_pair_formula(c, f);
    }

    for (const auto& e : br.entries) {
      Finding fd;
      fd.cell = e.cell;
      fd.message = e.message;
      switch (e.status) {
        case CheckStatus::kOk: fd.severity = "ok"; break;
        case CheckStatus::kViolation: fd.severity = "error"; break;
        case CheckStatus::kSkipped: fd.severity = "warning"; break;
      }
      if (e.status != CheckStatus::kSkipped) {
        if (opt.mode == BalanceMode::kBounded) {
          fd.values.emplace_back("div", div_coefficient(c, f, e.cell).str());
          fd.values.emplace_back("tau", (tau ? tau->at(e.cell) : retraction_divisor(c, f).at(e.cell)).str());
        }
        fd.values.emplace_back("residual", e.value.str());
      }
      rep.findings.push_back(std::move(fd));
    }
    rep.findings.push_back({"ok", "", "summary",
                            {{"ok", std::to_string(br.count(CheckStatus::kOk))},
                             {"violations", std::to_string(br.count(CheckStatus::kViolation))},
                             {"skipped", std::to_string(br.count(CheckStatus::kSkipped))}}});
    if (!br.ok()) rep.fail();
  });
}

Report cmd_st(const StOptions& opt) {
  std::string command = "st " + opt.complex_path + " " + opt.map_path + " --omega " + opt.omega;
  if (opt.degree) command += " --degree " + std::to_string(*opt.degree);
  return run(command, [&](Report& rep) {
    const auto c = json::complex_from_json(json::read_file(opt.complex_path));
    const auto phi = json::trop_map_from_json(json::read_file(opt.map_path), c);
    if (!checked_inputs(rep, check_trop_map(c, phi))) return;
    const RatVector omega = json::parse_point(opt.omega);

    STResult st;
    try {
      st = st_sum(c, phi, omega);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInconsistentSpans) throw;
      rep.findings.push_back({"error", "", e.what(), {}});
      rep.fail();
      return;
    }
    for (const auto& t : st.terms)
      rep.findings.push_back({"ok", cell_of(t.fiber), "fiber cell",
                              {{"point", to_string(t.fiber.point)}, {"index", t.index.str()}}});
    rep.findings.push_back({"ok", "", "sum", {{"sum", st.sum.get_str()}}});
    if (opt.degree) {
      try {
        const Integer m = tropical_multiplicity(st, Integer(*opt.degree));
        rep.findings.push_back({"ok", "", "tropical multiplicity", {{"m_trop", m.get_str()}}});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNonIntegralMultiplicity) throw;
        rep.findings.push_back({"error", "", e.what(), {{"sum", st.sum.get_str()}}});
        rep.fail();
      }
    }
  });
}

namespace {

void certificate_findings(Report& rep, const Certificate& cert) {
  Finding fd{cert.pass ? "ok" : "error", "", cert.reason, {}};
  for (const auto& w : cert.witness) fd.values.emplace_back("witness", w);
  rep.findings.push_back(std::move(fd));
  if (!cert.pass) rep.fail();
}

}  // namespace

Report cmd_faithful(const std::string& complex_path, const std::string& map_path) {
  return run("faithful " + complex_path + " " + map_path, [&](Report& rep) {
    const auto c = json::complex_from_json(json::read_file(complex_path));
    const auto phi = json::trop_map_from_json(json::read_file(map_path), c);
    if (!checked_inputs(rep, check_trop_map(c, phi))) return;
    certificate_findings(rep, faithfulness_certificate(c, phi));
  });
}

Report cmd_section(const std::string& complex_path, const std::string& map_path, const std::string& omega) {
  return run("section " + complex_path + " " + map_path + " --omega " + omega, [&](Report& rep) {
    const auto c = json::complex_from_json(json::read_file(complex_path));
    const auto phi = json::trop_map_from_json(json::read_file(map_path), c);
    if (!checked_inputs(rep, check_trop_map(c, phi))) return;
    certificate_findings(rep, section_certificate(c, phi, json::parse_point(omega)));
  });
}

ExampleOutput cmd_example(const ExampleOptions& opt) {
  static const char* const kEmitNames[] = {"complex", "plf", "alpha-table", "svg"};
  ExampleOutput out;
  out.report = run("example --name " + opt.name + " --refine " + std::to_string(opt.refine) + " --emit " +
                       kEmitNames[static_cast<int>(opt.emit)],
                   [&](Report& rep) {
                     if (opt.name != "e2") {
                       rep.error(kExitInput, "unknown example \"" + opt.name + "\" (available: e2)");
                       return;
                     }
                     if (opt.refine < 2) throw Error(ErrorCode::kInvalidInput, "--refine must be at least 2");
                     const TorusTriangulation coarse = build_C();
                     const TorusTriangulation fine = refine(coarse, opt.refine);
                     switch (opt.emit) {
                       case Emit::kAlphaTable:
                         out.content = json::alpha_table_csv(alpha_table(coarse, fine));
                         return;
                       case Emit::kSvg: {
                         const E2Pair pair = build_e2_pair(coarse, refine(coarse, 2));
                         std::map<std::string, std::vector<std::string>> rays;
                         for (const auto& cell : pair.complex.cells())
                           if (cell.r() == 0 && cell.s() == 1)
                             rays[cell.vertex_ids().front()].push_back(cell.ray_labels().front());
                         out.content = render_svg(coarse, pair.function.vertex_values, rays);
                         return;
                       }
                       default: break;
                     }
                     const E2Pair pair = build_e2_pair(coarse, fine);
                     const auto doc = opt.emit == Emit::kComplex ? json::to_json(pair.complex)
                                                                 : json::to_json(pair.function);
                     out.content = doc.dump(2) + "\n";
                     rep.notes.push_back(kE2ProvenanceNote);
                   });
  if (out.report.status == Status::kError) out.content.clear();
  return out;
}

}  // namespace skeltrop::cli
