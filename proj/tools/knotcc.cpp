// knotcc: exact knot-concordance computations over Seifert matrices.
//
// Exit codes: 0 success / certified positive, 1 computation rejection
// (invalid matrix, hypothesis failure), 2 usage error, 3 inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kc/certificate.hpp"
#include "kc/io.hpp"

namespace {

using namespace kc;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
}

SeifertMatrix load_matrix(const std::string& path) {
  Json j = read_json(path);
  IMat m;
  try {
    m = imat_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad matrix file: ") + e.what());
  }
  return SeifertMatrix::validate(std::move(m));  // failure -> exit 1
}

void emit(const Json& j, const std::string& out_path) {
  std::string bytes = canonical_dump(j);
  if (out_path.empty()) {
    std::cout << bytes << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write file: " + out_path);
  out << bytes << "\n";
}

std::vector<Int> parse_combo(const std::string& s) {
  std::vector<Int> a;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      a.push_back(Int(tok));
    } catch (const std::exception&) {
      throw UsageError("bad combination entry: " + tok);
    }
  }
  if (a.empty()) throw UsageError("empty combination");
  return a;
}

std::string combo_tag(const std::vector<int>& a) {
  std::string t = "cert";
  for (int x : a) t += x < 0 ? "_m" + std::to_string(-x) : "_" + std::to_string(x);
  return t + ".json";
}

int run(int argc, char** argv) {
  CLI::App app{"exact knot concordance toolkit"};
  app.require_subcommand(1);

  std::string matrix_path, family_path, delta_path, out_path, root, combo, tol_s;
  long p = 0, crossing = 0, count = 0, prime_floor = 0, bound = 1;
  long pair_i = 0, pair_j = 0, index = 0;
  std::string n_str = "1", cert_path, outdir;
  bool minus_one = false, self_ann = false, override_flag = false;

  auto add_matrix = [&](CLI::App* c) {
    c->add_option("--matrix", matrix_path, "Seifert matrix JSON file")->required();
  };
  auto add_out = [&](CLI::App* c) {
    c->add_option("-o,--output", out_path, "output file (default stdout)");
  };

  auto* inv = app.add_subcommand("invariants", "Alexander polynomial, Arf, genus");
  add_matrix(inv);
  add_out(inv);
  inv->callback([&] {
    SeifertMatrix v = load_matrix(matrix_path);
    AlexanderData ad = alexander(v);
    emit(Json{{"a_K", ad.top_coeff.get_str()},
              {"arf", arf(v)},
              {"degree", ad.degree},
              {"delta", laurent_to_json(ad.delta)},
              {"delta_str", ad.delta.to_string()},
              {"genus", (long)v.genus()}},
         out_path);
  });

  auto* sig = app.add_subcommand("signature", "Levine-Tristram signature at one point");
  add_matrix(sig);
  add_out(sig);
  auto* root_opt = sig->add_option("--root", root, "root of unity p/r");
  auto* mo_opt = sig->add_flag("--minus-one", minus_one, "evaluate at omega = -1");
  root_opt->excludes(mo_opt);
  sig->callback([&] {
    SeifertMatrix v = load_matrix(matrix_path);
    UnitPoint w = UnitPoint::minus_one();
    Json omega = "2/1";
    if (!minus_one) {
      if (root.empty()) throw UsageError("signature: need --root p/r or --minus-one");
      auto slash = root.find('/');
      if (slash == std::string::npos)
        throw UsageError("signature: --root must be p/r");
      long d = 0, r = 0;
      try {
        d = std::stol(root.substr(0, slash));
        r = std::stol(root.substr(slash + 1));
      } catch (const std::exception&) {
        throw UsageError("signature: --root must be p/r with integers");
      }
      if (d < 1 || r < 0 || r >= d) throw UsageError("signature: need 0 <= r < p");
      w = UnitPoint::root_of_unity(d, r);
      omega = root;
    }
    SigValue s = lt_signature(v, w);
    emit(Json{{"nullity", s.nullity}, {"omega", omega}, {"signature", s.signature}},
         out_path);
  });

  auto* ssum = app.add_subcommand("sigsum", "sum of signatures over p-th roots of unity");
  add_matrix(ssum);
  add_out(ssum);
  ssum->add_option("--p", p, "prime order")->required();
  ssum->callback([&] {
    if (p < 2 || !kc::detail::is_prime(p)) throw UsageError("sigsum: p must be prime");
    SeifertMatrix v = load_matrix(matrix_path);
    long s = sig_sum(v, p);  // singular evaluation point -> exit 1
    emit(Json{{"p", p}, {"sum", std::to_string(s)}}, out_path);
  });

  auto* prof = app.add_subcommand("sigprofile", "full signature step function");
  add_matrix(prof);
  add_out(prof);
  prof->callback([&] {
    SeifertMatrix v = load_matrix(matrix_path);
    emit(profile_to_json(sig_profile(v)), out_path);
  });

  auto* sint = app.add_subcommand("sigintegral", "normalized signature integral");
  add_matrix(sint);
  add_out(sint);
  sint->add_option("--tol", tol_s, "enclosure width bound, rational (default 1/10^9)");
  sint->callback([&] {
    Rat tol(1, 1000000000);
    if (!tol_s.empty()) {
      try {
        tol = rat_from_string(tol_s);
      } catch (const std::exception&) {
        throw UsageError("sigintegral: bad --tol");
      }
      if (sgn(tol) <= 0) throw UsageError("sigintegral: --tol must be positive");
    }
    SeifertMatrix v = load_matrix(matrix_path);
    emit(interval_to_json(sig_integral(v, tol)), out_path);
  });

  auto* slice = app.add_subcommand("algslice", "algebraic sliceness gate");
  add_matrix(slice);
  add_out(slice);
  slice->add_option("--certificate", cert_path, "metabolizer JSON to verify");
  slice->add_option("--bound", bound, "search height bound (default 1)");
  slice->add_flag("--override", override_flag, "accept without a metabolizer");
  slice->callback([&] {
    if (bound < 1) throw UsageError("algslice: --bound must be positive");
    SeifertMatrix v = load_matrix(matrix_path);
    SlicePolicy policy;
    policy.search_bound = bound;
    policy.override_flag = override_flag;
    if (!cert_path.empty()) {
      try {
        policy.certificate = metabolizer_from_json(read_json(cert_path)).basis;
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        throw UsageError(std::string("bad metabolizer file: ") + e.what());
      }
    }
    SliceValidation sv = validate_algebraically_slice(v, policy);
    Json j{{"accepted", sv.accepted},
           {"fox_milnor", sv.fox_milnor_ok},
           {"how", sv.how}};
    j["metabolizer"] =
        sv.metabolizer ? metabolizer_to_json(*sv.metabolizer) : Json(nullptr);
    emit(j, out_path);
    if (!sv.accepted) {
      if (!sv.fox_milnor_ok)
        throw std::domain_error("Fox-Milnor condition fails");
      if (policy.certificate)
        throw std::domain_error("supplied metabolizer rejected");
      throw Inconclusive("no metabolizer found within the height bound");
    }
  });

  auto* bl = app.add_subcommand("blanchfield", "rational Blanchfield form");
  add_matrix(bl);
  add_out(bl);
  std::vector<long> pair_v;
  bl->add_option("--pair", pair_v, "pairing of generators i j (1-based)")->expected(2);
  bl->add_flag("--self-annihilating", self_ann, "enumerate self-annihilating submodules");
  bl->callback([&] {
    SeifertMatrix v = load_matrix(matrix_path);
    size_t n = v.dim();
    if (!pair_v.empty()) {
      pair_i = pair_v[0];
      pair_j = pair_v[1];
      if (pair_i < 1 || pair_j < 1 || (size_t)pair_i > n || (size_t)pair_j > n)
        throw UsageError("blanchfield: --pair indices out of range");
      std::vector<LaurentPoly> x(n), y(n);
      x[pair_i - 1] = LaurentPoly(Rat(1));
      y[pair_j - 1] = LaurentPoly(Rat(1));
      BlanchfieldValue b = bl_pair(v, x, y);
      emit(Json{{"den", poly_to_json(b.den)}, {"num", poly_to_json(b.num)}},
           out_path);
      return;
    }
    if (self_ann) {
      auto subs = self_annihilating_submodules(v);  // non-squarefree -> exit 1
      Json out = Json::array();
      for (auto& s : subs) {
        Json gens = Json::array();
        for (auto& g : s.generators) {
          Json vec = Json::array();
          for (auto& c : g) vec.push_back(laurent_to_json(c));
          gens.push_back(std::move(vec));
        }
        out.push_back(Json{{"generators", std::move(gens)}, {"rank", s.rank}});
      }
      emit(Json{{"submodules", std::move(out)}}, out_path);
      return;
    }
    AlexanderModule m = present_module(v);
    Json inv_f = Json::array(), pieces = Json::array();
    for (auto& fpoly : m.invariant_factors) inv_f.push_back(laurent_to_json(fpoly));
    for (auto& q : m.cyclic_pieces) pieces.push_back(laurent_to_json(q));
    emit(Json{{"cyclic_pieces", std::move(pieces)},
              {"invariant_factors", std::move(inv_f)}},
         out_path);
  });

  auto* forge = app.add_subcommand("forge", "synthesize a companion family");
  add_matrix(forge);
  add_out(forge);
  forge->add_option("--crossing", crossing, "crossing number for C_K")->required();
  forge->add_option("--count", count, "number of companions")->required();
  forge->add_option("--prime-floor", prime_floor, "smallest admissible prime");
  forge->callback([&] {
    if (crossing < 1) throw UsageError("forge: --crossing must be positive");
    if (count < 1) throw UsageError("forge: --count must be positive");
    SeifertMatrix v = load_matrix(matrix_path);
    FamilyDescriptor f =
        forge_family(v, CGBound::from_crossing(crossing), count, prime_floor);
    emit(family_to_json(f), out_path);
  });

  auto* cert = app.add_subcommand("certify", "linear-combination obstruction");
  cert->add_option("--family", family_path, "family JSON file")->required();
  cert->add_option("--combo", combo, "integer combination, e.g. \"1,0,0\"")->required();
  add_out(cert);
  cert->callback([&] {
    FamilyDescriptor f = [&] {
      try {
        return family_from_json(read_json(family_path));
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        throw UsageError(std::string("bad family file: ") + e.what());
      }
    }();
    std::vector<Int> a = parse_combo(combo);
    Certificate c;
    try {
      c = certify_linear_combination(f, a);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    emit(certificate_to_json(c), out_path);
    if (c.verdict != "OBSTRUCTED") throw Inconclusive(c.verdict);
  });

  auto* split = app.add_subcommand("split", "coprime non-concordance certificate");
  split->add_option("--family", family_path, "family JSON file")->required();
  split->add_option("--index", index, "companion index (1-based)")->required();
  split->add_option("--n", n_str, "nonzero copy count")->required();
  split->add_option("--delta", delta_path, "target Alexander polynomial JSON")->required();
  add_out(split);
  split->callback([&] {
    FamilyDescriptor f = [&] {
      try {
        return family_from_json(read_json(family_path));
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        throw UsageError(std::string("bad input file: ") + e.what());
      }
    }();
    LaurentPoly d;
    try {
      d = laurent_from_json(read_json(delta_path));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad input file: ") + e.what());
    }
    Int n;
    try {
      n = Int(n_str);
    } catch (const std::exception&) {
      throw UsageError("split: --n must be an integer");
    }
    Certificate c;
    try {
      c = certify_coprime_nonconcordance(f, (size_t)std::max(0L, index), n, d);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    emit(certificate_to_json(c), out_path);
    if (c.verdict != "NOT_CONCORDANT_BY_SPLITTING") throw Inconclusive(c.verdict);
  });

  auto* pipe = app.add_subcommand("pipeline", "forge and certify every small combination");
  add_matrix(pipe);
  pipe->add_option("--crossing", crossing, "crossing number for C_K")->required();
  pipe->add_option("--count", count, "number of companions")->required();
  pipe->add_option("--prime-floor", prime_floor, "smallest admissible prime");
  pipe->add_option("--outdir", outdir, "output directory")->required();
  pipe->callback([&] {
    if (crossing < 1) throw UsageError("pipeline: --crossing must be positive");
    if (count < 1) throw UsageError("pipeline: --count must be positive");
    if (count > 8) throw UsageError("pipeline: --count too large for the batch box");
    SeifertMatrix v = load_matrix(matrix_path);
    FamilyDescriptor f =
        forge_family(v, CGBound::from_crossing(crossing), count, prime_floor);
    emit(family_to_json(f), outdir + "/family.json");
    // every a in {-1,0,1}^count except zero, in odometer order
    std::vector<int> a(count, -1);
    bool all_obstructed = true;
    for (;;) {
      bool zero = true;
      for (int x : a)
        if (x != 0) zero = false;
      if (!zero) {
        std::vector<Int> combo;
        for (int x : a) combo.push_back(Int(x));
        Certificate c = certify_linear_combination(f, combo);
        emit(certificate_to_json(c), outdir + "/" + combo_tag(a));
        if (c.verdict != "OBSTRUCTED") all_obstructed = false;
      }
      int k = count - 1;
      while (k >= 0 && a[k] == 1) a[k--] = -1;
      if (k < 0) break;
      ++a[k];
    }
    if (!all_obstructed) throw Inconclusive("some combinations not obstructed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  }
}
