#include <algorithm>
#include <mutex>
#include <thread>

#include "commands.hpp"
#include "symplecto/curvature/curvature.hpp"
#include "symplecto/errors.hpp"
#include "symplecto/io/serialization.hpp"


namespace symplecto::cli {

namespace {

using curvature::CurvatureReport;
using curvature::ModePair;

const std::vector<std::string> kHeader{"formula", "q", "n", "m", "k", "l", "K",
                                       "term1", "term2", "term3", "term4"};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

// Closed forms report factors rather than additive terms; those stay blank.
std::vector<std::string> row(const CurvatureReport& r, int q, const ModePair* p) {
  std::vector<std::string> cells{curvature::formula_name(r.formula), std::to_string(q)};
  for (auto v : {&ModePair::n, &ModePair::m, &ModePair::k, &ModePair::l}) {
    cells.push_back(p != nullptr ? join(p->*v) : "");
  }
  cells.push_back(io::format_double(r.K));
  const bool additive = r.formula != curvature::Formula::TorusBi &&
                        r.formula != curvature::Formula::TorusRight;
  for (std::size_t i = 0; i < 4; ++i) {
    cells.push_back(additive && i < r.terms.size() ? io::format_double(r.terms[i].second) : "");
  }
  return cells;
}

ModePair parse_pair(const std::string& text) {
  const auto v = parse_int_list(text, "--pair");
  if (v.empty() || v.size() % 4 != 0) {
    throw UsageError("--pair needs 4q integers n,m,k,l (q-vectors concatenated), got '" + text + "'");
  }
  const std::size_t q = v.size() / 4;
  ModePair p;
  p.n.assign(v.begin(), v.begin() + q);
  p.m.assign(v.begin() + q, v.begin() + 2 * q);
  p.k.assign(v.begin() + 2 * q, v.begin() + 3 * q);
  p.l.assign(v.begin() + 3 * q, v.end());
  return p;
}

std::string config(const std::string& command, const std::string& detail) {
  return nlohmann::json{{"command", "curvature " + command}, {"arguments", detail}}.dump();
}

// Canonical q = 1 wavevectors (first nonzero entry positive) with entries in [-w, w].
std::vector<std::pair<int, int>> canonical_wavevectors(int w) {
  std::vector<std::pair<int, int>> out;
  for (int n = 0; n <= w; ++n) {
    for (int m = -w; m <= w; ++m) {
      if (n == 0 && m <= 0) continue;
      out.emplace_back(n, m);
    }
  }
  return out;
}

io::CsvWriter sweep(int w, unsigned threads) {
  const auto vs = canonical_wavevectors(w);
  io::CsvWriter csv(kHeader);
  std::mutex mutex;
  auto work = [&](unsigned id) {
    std::vector<std::vector<std::string>> local;
    for (std::size_t a = id; a < vs.size(); a += threads) {
      for (const auto& [k, l] : vs) {
        const ModePair p = ModePair::q1(vs[a].first, vs[a].second, k, l);
        if (p.resonant()) continue;  // one function twice: no plane
        local.push_back(row(curvature::k_torus_bi(p), 1, &p));
        local.push_back(row(curvature::k_bi(p.f(), p.h()), 1, &p));
        local.push_back(row(curvature::k_torus_right(p), 1, &p));
        local.push_back(row(curvature::k_right_general(p.f(), p.h()), 1, &p));
      }
    }
    std::lock_guard lock(mutex);
    for (auto& r : local) csv.add_row(std::move(r));
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& t : pool) t.join();
  csv.sort_rows();
  return csv;
}

}  // namespace

void add_curvature(CLI::App& app, const Invocation& inv, Action& action) {
  auto* cmd = app.add_subcommand("curvature", "Sectional curvature of torus Hamiltonian pairs");
  cmd->require_subcommand(1);

  struct Options {
    std::string pair, out, metric = "right";
    std::vector<std::string> hamiltonians;
    int max_wavenumber = 3;
    unsigned threads = 0;
  };
  auto opt = std::make_shared<Options>();

  for (const char* name : {"torus-bi", "torus-right"}) {
    auto* sub = cmd->add_subcommand(name, std::string("Closed form for F = cos(n.x+m.y), "
                                                      "H = cos(k.x+l.y)"));
    sub->add_option("--pair", opt->pair, "n,m,k,l (q = 1) or the 4q entries of n, m, k, l")
        ->required();
    sub->add_option("--out", opt->out, "CSV file (default: stdout)");
    const bool bi = std::string(name) == "torus-bi";
    sub->callback([opt, &action, inv, bi, name] {
      action = [opt, inv, bi, name] {
        const ModePair p = parse_pair(opt->pair);
        const CurvatureReport r = bi ? curvature::k_torus_bi(p) : curvature::k_torus_right(p);
        io::CsvWriter csv(kHeader);
        csv.add_row(row(r, p.q(), &p));
        emit(csv.str(), opt->out, inv, config(name, opt->pair));
        return kExitOk;
      };
    });
  }

  auto* general = cmd->add_subcommand("general", "Curvature of two Hamiltonians given as JSON");
  general->add_option("--hamiltonians", opt->hamiltonians, "F and H files")
      ->required()
      ->expected(2)
      ->check(CLI::ExistingFile);
  general->add_option("--metric", opt->metric, "right, bi, eigen or structure")
      ->check(CLI::IsMember({"right", "bi", "eigen", "structure"}));
  general->add_option("--out", opt->out, "CSV file (default: stdout)");
  general->callback([opt, &action, inv] {
    action = [opt, inv] {
      const auto f = io::load_trig_json(opt->hamiltonians[0]);
      const auto h = io::load_trig_json(opt->hamiltonians[1]);
      CurvatureReport r;
      if (opt->metric == "bi") {
        r = curvature::k_bi(f, h);
      } else if (opt->metric == "eigen") {
        r = curvature::k_right_eigen(f, h);
      } else if (opt->metric == "structure") {
        r = curvature::k_from_structure_constants(curvature::torus_structure_expansion(f, h));
      } else {
        r = curvature::k_right_general(f, h);
      }
      io::CsvWriter csv(kHeader);
      csv.add_row(row(r, f.q(), nullptr));
      emit(csv.str(), opt->out, inv,
           config("general", opt->hamiltonians[0] + " " + opt->hamiltonians[1] + " " + opt->metric));
      return kExitOk;
    };
  });

  auto* sw = cmd->add_subcommand("sweep", "All q = 1 cosine pairs with canonical wavevectors");
  sw->add_option("--max-wavenumber", opt->max_wavenumber, "largest |entry| W")
      ->check(CLI::Range(1, 12));
  sw->add_option("--threads", opt->threads, "worker threads (0 = all cores)");
  sw->add_option("--out", opt->out, "CSV file (default: stdout)");
  sw->callback([opt, &action, inv] {
    action = [opt, inv] {
      const unsigned threads =
          opt->threads != 0 ? opt->threads : std::max(1u, std::thread::hardware_concurrency());
      emit(sweep(opt->max_wavenumber, threads).str(), opt->out, inv,
           config("sweep", "W=" + std::to_string(opt->max_wavenumber)));
      return kExitOk;
    };
  });
}

}  // namespace symplecto::cli
