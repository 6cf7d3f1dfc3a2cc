// f2iso command line: classification of involutions in isometry groups of
// nondegenerate symmetric bilinear forms over F2.
//
// Exit codes: 0 success, 1 input/usage error, 2 mathematical precondition
// violation (including failed verification).

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "f2iso/f2iso.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace f2iso;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BitMatrix read_matrix(const std::string& path) {
  try {
    if (path == "-") return parse_matrix(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return parse_matrix(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + " in '" + path + "'");
  }
}

SpaceType space_type_for(const std::string& flag, int dim) {
  if (!flag.empty()) {
    try {
      return parse_space_type(flag);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return dim % 2 == 0 ? SpaceType::Evo : SpaceType::Oddo;
}

BilinearSpace make_standard_space(SpaceType type, int dim) {
  try {
    return standard_space(type, dim);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Involution make_involution(const BilinearSpace& space, const BitMatrix& m) {
  Isometry iso = [&] {
    try {
      return Isometry(space, m);
    } catch (const std::invalid_argument&) {
      throw MathError("not an isometry: M^T G M differs from the Gram matrix");
    }
  }();
  try {
    return Involution(std::move(iso));
  } catch (const std::invalid_argument&) {
    throw MathError("not an involution: M^2 differs from the identity");
  }
}

json dd_json(const DDInvariant& dd) {
  return json::array({dd.D, dd.alpha, dd.Dt, dd.alphat});
}

json profile_json_or_null(const Involution& s) {
  if (s.space().type() != SpaceType::Evo || s.space().dim() > 24)
    return nullptr;
  IProfile p = i_profile(s);
  json arr = json::array();
  for (long long x : p.counts) arr.push_back(x);
  return arr;
}

int cmd_classify(const std::string& path, const std::string& space_flag,
                 const std::string& format) {
  BitMatrix m = read_matrix(path);
  if (!m.is_square()) throw UsageError("input matrix must be square");
  SpaceType type = space_type_for(space_flag, m.rows());
  BilinearSpace space = make_standard_space(type, m.rows());
  Involution s = make_involution(space, m);
  ClassDescriptor desc = classify_involution(s);
  if (format == "text") {
    std::cout << "space: " << to_string(desc.type) << "\n"
              << "dim: " << desc.dim << "\n"
              << "DD: " << desc.dd.compact() << "\n"
              << "family: " << to_string(desc.family) << "\n"
              << "k: " << desc.k << "\n";
    return 0;
  }
  json out;
  out["space"] = to_string(desc.type);
  out["dim"] = desc.dim;
  out["DD"] = dd_json(desc.dd);
  out["dd"] = desc.dd.compact();
  out["family"] = to_string(desc.family);
  out["k"] = desc.k;
  json prof = profile_json_or_null(s);
  if (!prof.is_null()) out["I"] = prof;
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_invariants(const std::string& path, const std::string& space_flag,
                   const std::string& format) {
  BitMatrix m = read_matrix(path);
  if (!m.is_square()) throw UsageError("input matrix must be square");
  SpaceType type = space_type_for(space_flag, m.rows());
  BilinearSpace space = make_standard_space(type, m.rows());
  Involution s = make_involution(space, m);
  DDInvariant dd = dd_invariant(s);
  if (format == "text") {
    std::cout << "space: " << to_string(type) << "\n"
              << "dim: " << space.dim() << "\n"
              << "DD: " << dd.compact() << "\n";
    if (type == SpaceType::Evo)
      std::cout << "charge: " << charge(s).value << "\n";
    return 0;
  }
  json out;
  out["space"] = to_string(type);
  out["dim"] = space.dim();
  out["DD"] = {{"D", dd.D},
               {"alpha", dd.alpha},
               {"Dt", dd.Dt},
               {"alphat", dd.alphat}};
  out["dd"] = dd.compact();
  out["I"] = profile_json_or_null(s);
  if (type == SpaceType::Evo)
    out["charge"] = charge(s).value;
  else
    out["charge"] = nullptr;
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_representatives(const std::string& space_flag, int dim) {
  SpaceType type = [&] {
    try {
      return parse_space_type(space_flag);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  std::vector<Representative> reps;
  try {
    reps = representatives(type, dim);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool first = true;
  for (const auto& [desc, rep] : reps) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "# DD=[" << desc.dd.D << "," << desc.dd.alpha << ","
              << desc.dd.Dt << "," << desc.dd.alphat
              << "] family=" << to_string(desc.family) << " k=" << desc.k
              << "\n"
              << format_matrix(rep.matrix());
  }
  return 0;
}

int cmd_enumerate(const std::string& space_flag, int dim, bool involutions_only,
                  bool force, int jobs) {
  SpaceType type = [&] {
    try {
      return parse_space_type(space_flag);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  BilinearSpace space = make_standard_space(type, dim);
  BitMatrix id = BitMatrix::identity(dim);
  auto emit = [&](const BitMatrix& m, std::string& out, bool& first) {
    if (involutions_only && multiply(m, m) != id) return;
    if (!first) out += "\n";
    first = false;
    out += format_matrix(m);
  };
  try {
    if (jobs <= 1) {
      bool first = true;
      std::string chunk;
      for_each_isometry(
          space,
          [&](const BitMatrix& m) {
            chunk.clear();
            bool local_first = first;
            emit(m, chunk, local_first);
            first = local_first;
            std::cout << chunk;
          },
          EnumerationOptions{force, 0, 1});
    } else {
      // Partitioned enumeration; parts are emitted in part order.
      std::vector<std::string> parts(static_cast<std::size_t>(jobs));
      std::vector<bool> nonempty(static_cast<std::size_t>(jobs), false);
      std::vector<std::thread> threads;
      for (int p = 0; p < jobs; ++p)
        threads.emplace_back([&, p] {
          bool first = true;
          for_each_isometry(
              space,
              [&](const BitMatrix& m) {
                bool local_first = first;
                emit(m, parts[static_cast<std::size_t>(p)], local_first);
                first = local_first;
              },
              EnumerationOptions{force, p, jobs});
          nonempty[static_cast<std::size_t>(p)] = !first;
        });
      for (auto& t : threads) t.join();
      bool first = true;
      for (int p = 0; p < jobs; ++p) {
        if (!nonempty[static_cast<std::size_t>(p)]) continue;
        if (!first) std::cout << "\n";
        first = false;
        std::cout << parts[static_cast<std::size_t>(p)];
      }
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int cmd_order(const std::string& space_flag, int dim) {
  try {
    std::cout << group_order(parse_space_type(space_flag), dim).str() << "\n";
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int cmd_dsum(const std::string& path_a, const std::string& path_b,
             const std::string& type_a, const std::string& type_b) {
  BitMatrix ma = read_matrix(path_a), mb = read_matrix(path_b);
  if (!ma.is_square() || !mb.is_square())
    throw UsageError("input matrices must be square");
  SpaceType ta, tb;
  try {
    ta = parse_space_type(type_a);
    tb = parse_space_type(type_b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Involution s = make_involution(make_standard_space(ta, ma.rows()), ma);
  Involution t = make_involution(make_standard_space(tb, mb.rows()), mb);
  SumPrediction pred = predict_dd_sum(dd_invariant(s), ta, dd_invariant(t), tb);
  DDInvariant computed = dd_invariant(direct_sum(s, t));
  std::cout << "predicted DD = " << pred.result.compact() << " (rule "
            << to_string(pred.rule) << ", base " << pred.base.compact()
            << ", correction [" << pred.correction[0] << ","
            << pred.correction[1] << "," << pred.correction[2] << ","
            << pred.correction[3] << "])\n";
  std::cout << "computed  DD = " << computed.compact() << "\n";
  if (computed == pred.result) {
    std::cout << "MATCH\n";
    return 0;
  }
  std::cout << "MISMATCH\n";
  return 2;
}

int cmd_semidirect_embed(const std::string& path, const std::string& v_bits,
                         int lambda) {
  BitMatrix a = read_matrix(path);
  if (!a.is_square()) throw UsageError("input matrix must be square");
  if (a.rows() % 2 != 0)
    throw UsageError("the symplectic factor has even dimension");
  if (static_cast<int>(v_bits.size()) != a.rows())
    throw UsageError("--v must have exactly dim V = " +
                     std::to_string(a.rows()) + " bits");
  BitVector v = [&] {
    try {
      return BitVector::from_string(v_bits);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  SemiDirectGroup g(a.rows());
  try {
    Isometry(g.base_space(), a);
  } catch (const std::invalid_argument&) {
    throw MathError("the matrix is not symplectic");
  }
  std::cout << format_matrix(
      g.theta(SemiDirectElement{std::move(v), lambda, a}).matrix());
  return 0;
}

int cmd_verify(const std::string& suite, int jobs) {
  verify::Report report;
  try {
    report = verify::run_suite(suite, jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& check : report) {
    std::cout << check.name << ": " << check.detail << " ... "
              << (check.pass ? "PASS" : "FAIL") << "\n";
    ok = ok && check.pass;
  }
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "involutions in isometry groups of symmetric bilinear forms over F2"};
  app.require_subcommand(1);

  std::string path, path_b, space_flag, format = "json";
  std::string type_a, type_b, v_bits, suite;
  int dim = 0, lambda = 0, jobs = 1;
  bool involutions_only = false, force = false;

  auto* classify_cmd =
      app.add_subcommand("classify", "conjugacy class of an involution");
  classify_cmd->add_option("file", path, "matrix file ('-' for stdin)")
      ->required();
  classify_cmd->add_option("--space", space_flag,
                           "space type symp|evo|oddo (default: by parity)");
  classify_cmd->add_option("--format", format, "json|text");

  auto* invariants_cmd =
      app.add_subcommand("invariants", "DD-invariant, I-profile, charge");
  invariants_cmd->add_option("file", path, "matrix file ('-' for stdin)")
      ->required();
  invariants_cmd->add_option("--space", space_flag,
                             "space type symp|evo|oddo (default: by parity)");
  invariants_cmd->add_option("--format", format, "json|text");

  auto* reps_cmd = app.add_subcommand(
      "representatives", "one involution per conjugacy class");
  reps_cmd->add_option("--space", space_flag, "space type symp|evo|oddo")
      ->required();
  reps_cmd->add_option("--dim", dim, "dimension")->required();

  auto* enum_cmd =
      app.add_subcommand("enumerate", "stream the full isometry group");
  enum_cmd->add_option("--space", space_flag, "space type symp|evo|oddo")
      ->required();
  enum_cmd->add_option("--dim", dim, "dimension")->required();
  enum_cmd->add_flag("--involutions", involutions_only,
                     "emit only the involutions");
  enum_cmd->add_flag("--force", force, "lift the enumeration safety cap");
  enum_cmd->add_option("--jobs", jobs, "partitioned enumeration threads");

  auto* order_cmd = app.add_subcommand("order", "exact group order");
  order_cmd->add_option("--space", space_flag, "space type symp|evo|oddo")
      ->required();
  order_cmd->add_option("--dim", dim, "dimension")->required();

  auto* dsum_cmd = app.add_subcommand(
      "dsum", "predicted vs computed DD of a direct sum");
  dsum_cmd->add_option("fileA", path, "first involution")->required();
  dsum_cmd->add_option("fileB", path_b, "second involution")->required();
  dsum_cmd->add_option("--type-a", type_a, "space type of A")->required();
  dsum_cmd->add_option("--type-b", type_b, "space type of B")->required();

  auto* sd_cmd = app.add_subcommand("semidirect", "semidirect product tools");
  auto* embed_cmd = sd_cmd->add_subcommand(
      "embed", "theta of (v, lambda, A) as a (dim V + 2)-matrix");
  embed_cmd->add_option("file", path, "symplectic matrix A")->required();
  embed_cmd->add_option("--v", v_bits, "bits of v (length dim V)")->required();
  embed_cmd->add_option("--lambda", lambda, "0 or 1")->required();
  sd_cmd->require_subcommand(1);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd
      ->add_option("suite", suite,
                   "to6|to8-table|mirror-laws|theta-iso|dsum|sp-classes|"
                   "i-relations|sd-orbits")
      ->required();
  verify_cmd->add_option("--jobs", jobs, "partitioned enumeration threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (format != "json" && format != "text")
      throw UsageError("--format must be json or text");
    if (lambda != 0 && lambda != 1) throw UsageError("--lambda must be 0 or 1");
    if (jobs < 1) throw UsageError("--jobs must be positive");
    if (classify_cmd->parsed())
      return cmd_classify(path, space_flag, format);
    if (invariants_cmd->parsed())
      return cmd_invariants(path, space_flag, format);
    if (reps_cmd->parsed()) return cmd_representatives(space_flag, dim);
    if (enum_cmd->parsed())
      return cmd_enumerate(space_flag, dim, involutions_only, force, jobs);
    if (order_cmd->parsed()) return cmd_order(space_flag, dim);
    if (dsum_cmd->parsed()) return cmd_dsum(path, path_b, type_a, type_b);
    if (sd_cmd->parsed()) return cmd_semidirect_embed(path, v_bits, lambda);
    if (verify_cmd->parsed()) return cmd_verify(suite, jobs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
