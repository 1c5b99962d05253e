#include "ccdet/counting.hpp"
#include "ccdet/detector.hpp"
#include "ccdet/oracle.hpp"
#include "ccdet/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ccdet;

namespace {

// Flags shared across subcommands.
struct Opts {
  int n = 0;
  std::string input;
  std::string input2;
  std::string chart_file;
  std::string point;
  int samples = 5;
  unsigned seed = 12345;
  bool json = false;
  int deg = 0;
  std::string kind = "positive";
  std::string variance = "form";
  int count = 10;
};

std::string slurp(const std::string& spec) {
  if (spec.empty() || spec[0] != '@') return spec;
  std::ifstream f(spec.substr(1));
  if (!f) throw std::runtime_error("cannot open file: " + spec.substr(1));
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Object load_object(const Opts& o, const std::string& text) {
  if (o.n < 1) throw std::runtime_error("--n is required");
  return parse_object(slurp(text), o.n);
}

Chart load_chart(const Opts& o) {
  if (o.chart_file.empty()) throw std::runtime_error("--chart is required");
  return parse_chart(slurp(o.chart_file), o.n);
}

DetectConfig make_config(const Opts& o) {
  DetectConfig cfg;
  if (!o.point.empty()) cfg.base = parse_point(o.point, o.n);
  if (!o.chart_file.empty()) cfg.chart = load_chart(o);
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  return cfg;
}

void print_result(const Opts& o, const std::string& text) {
  if (o.json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["result"] = text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

int emit_report(const Opts& o, const DetectionReport& rep) {
  std::cout << (o.json ? report_json(rep) : report_text(rep));
  return verdict_exit_code(rep.verdict);
}

int cmd_d(const Opts& o) {
  Object obj = load_object(o, o.input);
  auto* a = std::get_if<DiffForm>(&obj);
  if (!a) throw std::runtime_error("d expects a differential form");
  print_result(o, exterior_derivative(*a).str());
  return 0;
}

int cmd_wedge(const Opts& o) {
  Object x = load_object(o, o.input), y = load_object(o, o.input2);
  if (x.index() != y.index()) throw std::runtime_error("wedge operands must have the same variance");
  std::string out = std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        return wedge(a, std::get<T>(y)).str();
      },
      x);
  print_result(o, out);
  return 0;
}

int cmd_ip(const Opts& o) {
  Object x = load_object(o, o.input), y = load_object(o, o.input2);
  if (auto* v = std::get_if<MultiVector>(&x)) {
    auto* a = std::get_if<DiffForm>(&y);
    if (!a) throw std::runtime_error("ip: expected vector then form, or 1-form then multivector");
    print_result(o, interior_vec_form(*v, *a).str());
    return 0;
  }
  auto* w = std::get_if<DiffForm>(&x);
  auto* v = std::get_if<MultiVector>(&y);
  if (!w || !v) throw std::runtime_error("ip: expected vector then form, or 1-form then multivector");
  print_result(o, interior_form_vec(*w, *v).str());
  return 0;
}

int cmd_sn(const Opts& o) {
  Object x = load_object(o, o.input), y = load_object(o, o.input2);
  auto* a = std::get_if<MultiVector>(&x);
  auto* b = std::get_if<MultiVector>(&y);
  if (!a || !b) throw std::runtime_error("sn expects two multivectors");
  print_result(o, schouten_bracket(*a, *b).str());
  return 0;
}

int cmd_iota(const Opts& o) {
  Object x = load_object(o, o.input);
  const MultiIndex top = all_multi_indices(o.n, o.n)[0];
  if (auto* v = std::get_if<MultiVector>(&x)) {
    print_result(o, iota_pq(*v, DiffForm::basis(o.n, top)).str());
  } else {
    print_result(o, iota_star_qp(std::get<DiffForm>(x), MultiVector::basis(o.n, top)).str());
  }
  return 0;
}

int cmd_christoffel(const Opts& o) {
  if (o.n < 1) throw std::runtime_error("--n is required");
  Connection g = christoffel_from_chart(load_chart(o));
  std::string s = connection_str(g);
  if (s.empty()) s = "all Gamma zero\n";
  std::cout << s;
  return 0;
}

int cmd_curvature(const Opts& o) {
  if (o.n < 1) throw std::runtime_error("--n is required");
  Connection g = christoffel_from_chart(load_chart(o));
  std::ostringstream os;
  bool flat = true;
  for (int a = 1; a <= o.n; ++a)
    for (int b = 1; b <= o.n; ++b)
      for (int c = 1; c <= o.n; ++c)
        for (int d = c + 1; d <= o.n; ++d) {
          Poly r = curvature(g, a, b, c, d);
          if (!r.is_zero()) {
            flat = false;
            os << "R[" << a << "][" << b << "][" << c << "][" << d << "] = " << r.str() << "\n";
          }
        }
  os << "flat: " << (flat ? "true" : "false") << "\n";
  std::cout << os.str();
  return 0;
}

int cmd_detect(const Opts& o, bool conformal) {
  Object obj = load_object(o, o.input);
  DetectConfig cfg = make_config(o);
  DetectionReport rep = std::visit(
      [&](const auto& a) { return conformal ? detect_conformal(a, cfg) : detect(a, cfg); }, obj);
  return emit_report(o, rep);
}

int cmd_counting(const Opts& o) {
  Counting c = counting(o.n, o.deg);
  if (o.json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = c.n;
    j["deg"] = c.deg;
    j["rows_second_order"] = c.rows_second_order;
    j["rows_first_order"] = c.rows_first_order;
    j["unknowns_gamma"] = c.unknowns_gamma;
    j["unknowns_v"] = c.unknowns_v;
    j["second_order_target"] = c.second_order_target;
    j["first_order_target"] = c.first_order_target;
    j["joined_equations"] = c.joined_equations;
    j["joined_unknowns"] = c.joined_unknowns;
    j["comparisons"] = c.comparisons;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : c.comparisons) std::cout << line << "\n";
  }
  return 0;
}

int cmd_verify_chart(const Opts& o) {
  Object obj = load_object(o, o.input);
  Chart chart = load_chart(o);
  VerifyResult vr =
      std::visit([&](const auto& a) { return verify_chart(a, chart); }, obj);
  if (o.json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["constant"] = vr.constant;
    j["residual"] = render_object(vr.residual);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (vr.constant ? "constant" : "not constant in this chart") << "\n";
    if (!vr.constant) std::cout << "residual: " << render_object(vr.residual) << "\n";
  }
  return vr.constant ? 0 : 1;
}

int cmd_oracle_gen(const Opts& o) {
  if (o.n < 1 || o.deg < 1) throw std::runtime_error("--n and --deg are required");
  const Variance v = o.variance == "vector" ? Variance::Contravariant : Variance::Covariant;
  std::ostringstream os;
  if (o.kind == "positive") {
    auto corpus = positive_corpus(o.n, o.deg, v, o.count, o.seed);
    for (size_t i = 0; i < corpus.size(); ++i) {
      os << "# sample " << i << "\n";
      os << "label: CONSTANT\n";
      os << "object: " << render_object(corpus[i].obj) << "\n";
      os << "chart:\n" << render_chart(corpus[i].chart) << "\n";
    }
  } else if (o.kind == "negative") {
    auto corpus = negative_corpus(o.n, o.deg, v, o.count, o.seed);
    for (size_t i = 0; i < corpus.size(); ++i) {
      os << "# sample " << i << "\n";
      os << "label: NOT_CONSTANT\n";
      os << "object: " << render_object(corpus[i].obj) << "\n";
      os << "obstruction: " << corpus[i].obstruction_kind << ": " << corpus[i].witness << "\n\n";
    }
  } else {
    throw std::runtime_error("--kind must be positive or negative");
  }
  std::cout << os.str();
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact exterior-calculus kernel and constant-coefficient detector"};
  app.require_subcommand(1);
  Opts o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "dimension");
    sub->add_option("--input", o.input, "object expression or @file");
    sub->add_option("--input2", o.input2, "second object expression or @file");
    sub->add_option("--chart", o.chart_file, "chart @file");
    sub->add_option("--point", o.point, "base point, comma-separated rationals");
    sub->add_option("--samples", o.samples, "rank-analysis sample count");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--deg", o.deg, "degree");
    sub->add_flag("--json", o.json, "JSON output");
    return sub;
  };

  auto* sd = add_common(app.add_subcommand("d", "exterior derivative"));
  auto* sw = add_common(app.add_subcommand("wedge", "wedge product"));
  auto* sip = add_common(app.add_subcommand("ip", "interior product (first slot)"));
  auto* ssn = add_common(app.add_subcommand("sn", "Schouten bracket"));
  auto* sio = add_common(app.add_subcommand("iota", "volume-form duality"));
  auto* sch = add_common(app.add_subcommand("christoffel", "chart Christoffel symbols"));
  auto* scu = add_common(app.add_subcommand("curvature", "chart connection curvature"));
  auto* sde = add_common(app.add_subcommand("detect", "constant-coefficient detection"));
  auto* sdc = add_common(app.add_subcommand("detect-conformal", "conformal detection"));
  auto* sco = add_common(app.add_subcommand("counting", "system size bookkeeping"));
  auto* svc = add_common(app.add_subcommand("verify-chart", "check constancy in a chart"));
  auto* sog = add_common(app.add_subcommand("oracle-gen", "generate labeled corpora"));
  sog->add_option("--kind", o.kind, "positive or negative");
  sog->add_option("--variance", o.variance, "form or vector");
  sog->add_option("--count", o.count, "sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (sd->parsed()) return cmd_d(o);
    if (sw->parsed()) return cmd_wedge(o);
    if (sip->parsed()) return cmd_ip(o);
    if (ssn->parsed()) return cmd_sn(o);
    if (sio->parsed()) return cmd_iota(o);
    if (sch->parsed()) return cmd_christoffel(o);
    if (scu->parsed()) return cmd_curvature(o);
    if (sde->parsed()) return cmd_detect(o, false);
    if (sdc->parsed()) return cmd_detect(o, true);
    if (sco->parsed()) return cmd_counting(o);
    if (svc->parsed()) return cmd_verify_chart(o);
    if (sog->parsed()) return cmd_oracle_gen(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 3;
}
