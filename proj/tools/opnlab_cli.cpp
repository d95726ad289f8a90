// opnlab command-line front end. Talks to the library only through opnlab.h.
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opnlab/opnlab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;

enum class Format { Human, Csv, JsonLines };

struct ContextDeleter {
  void operator()(opnlab_context* c) const { opnlab_context_destroy(c); }
};
struct AbundancyDeleter {
  void operator()(opnlab_abundancy* a) const { opnlab_abundancy_destroy(a); }
};
struct VerdictsDeleter {
  void operator()(opnlab_verdicts* v) const { opnlab_verdicts_destroy(v); }
};
struct EnclosureDeleter {
  void operator()(opnlab_enclosure* e) const { opnlab_enclosure_destroy(e); }
};

struct Failure {
  opnlab_status status;
};

void check(opnlab_status status) {
  if (status != OPNLAB_OK) throw Failure{status};
}

std::string decimal(const char* rational, unsigned digits) {
  std::unique_ptr<char, void (*)(char*)> text(
      opnlab_rational_to_decimal(rational, digits), opnlab_string_free);
  return text ? std::string(text.get()) : std::string("?");
}

std::unique_ptr<opnlab_context, ContextDeleter> make_context() {
  opnlab_context* ctx = nullptr;
  check(opnlab_context_create(&ctx));
  return std::unique_ptr<opnlab_context, ContextDeleter>(ctx);
}

Json nullable(const char* s) { return s ? Json(s) : Json(nullptr); }

int run_sigma(const std::string& input, Format format) {
  opnlab_abundancy* raw = nullptr;
  check(opnlab_abundancy_compute(input.c_str(), &raw));
  std::unique_ptr<opnlab_abundancy, AbundancyDeleter> report(raw);

  const std::string n = opnlab_abundancy_n(raw);
  const std::string factorization = opnlab_abundancy_factorization(raw);
  const std::string sigma = opnlab_abundancy_sigma(raw);
  const char* smo = opnlab_abundancy_sigma_minus_one(raw);
  const std::string smo_decimal = decimal(smo, 12);
  const std::string cls =
      opnlab_classification_name(opnlab_abundancy_classification(raw));

  switch (format) {
    case Format::Human:
      std::cout << "n               = " << n << "\n"
                << "factorization   = " << factorization << "\n"
                << "sigma           = " << sigma << "\n"
                << "sigma_minus_one = " << smo << " (" << smo_decimal << ")\n"
                << "classification  = " << cls << "\n";
      break;
    case Format::Csv:
      std::cout << "n,factorization,sigma,sigma_minus_one,sigma_minus_one_decimal,"
                   "classification\n"
                << n << ',' << factorization << ',' << sigma << ',' << smo << ','
                << smo_decimal << ',' << cls << "\n";
      break;
    case Format::JsonLines:
      std::cout << Json{{"n", n},
                        {"factorization", factorization},
                        {"sigma", sigma},
                        {"sigma_minus_one", smo},
                        {"sigma_minus_one_decimal", smo_decimal},
                        {"classification", cls}}
                       .dump()
                << "\n";
      break;
  }
  return kExitOk;
}

// Shared by `screen` and `radical`.
int print_verdicts(const opnlab_verdicts* v, Format format) {
  bool refuted = false;
  const std::size_t count = opnlab_verdicts_count(v);
  if (format == Format::Csv) {
    std::cout << "check,outcome,condition,witness\n";
  } else if (format == Format::Human && *opnlab_verdicts_input(v) != '\0') {
    std::cout << "input = " << opnlab_verdicts_input(v) << "\n";
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::string name = opnlab_verdicts_check(v, i);
    const opnlab_outcome outcome = opnlab_verdicts_outcome(v, i);
    const opnlab_condition condition = opnlab_verdicts_condition(v, i);
    const char* witness = opnlab_verdicts_witness(v, i);
    refuted = refuted || outcome == OPNLAB_VIOLATES;
    const char* condition_name =
        condition == OPNLAB_COND_NONE ? nullptr : opnlab_condition_name(condition);

    if (format == Format::Csv) {
      std::cout << name << ',' << opnlab_outcome_name(outcome) << ','
                << (condition_name ? condition_name : "") << ','
                << (witness ? witness : "") << "\n";
      continue;
    }
    if (format == Format::JsonLines) {
      Json row{{"check", name},
               {"outcome", opnlab_outcome_name(outcome)},
               {"condition", nullable(condition_name)},
               {"witness", nullable(witness)}};
      Json evidence = Json::array();
      for (std::size_t j = 0; j < opnlab_verdicts_evidence_count(v, i); ++j) {
        const char* q = nullptr;
        const char* product = nullptr;
        int ok = 0;
        opnlab_verdicts_evidence(v, i, j, &q, &product, &ok);
        evidence.push_back(Json{{"special_prime", nullable(q)},
                                {"product", product},
                                {"within_bounds", ok != 0}});
      }
      if (!evidence.empty()) row["evidence"] = std::move(evidence);
      std::cout << row.dump() << "\n";
      continue;
    }

    std::cout << name << ": " << opnlab_outcome_name(outcome);
    if (condition_name) std::cout << '(' << condition_name << ')';
    if (witness) std::cout << " witness=" << witness << " (" << decimal(witness, 12) << ')';
    std::cout << "\n";
    for (std::size_t j = 0; j < opnlab_verdicts_evidence_count(v, i); ++j) {
      const char* q = nullptr;
      const char* product = nullptr;
      int ok = 0;
      opnlab_verdicts_evidence(v, i, j, &q, &product, &ok);
      std::cout << "  " << (q ? std::string("case1 q=") + q : std::string("case2"))
                << ": " << product << " (" << decimal(product, 12) << ") "
                << (ok ? "within bounds" : "out of bounds") << "\n";
    }
  }
  return refuted ? kExitRefuted : kExitOk;
}

int run_screen(const std::string& input, Format format) {
  auto ctx = make_context();
  opnlab_verdicts* raw = nullptr;
  check(opnlab_screen(ctx.get(), input.c_str(), &raw));
  std::unique_ptr<opnlab_verdicts, VerdictsDeleter> verdicts(raw);
  return print_verdicts(raw, format);
}

int run_radical(const std::vector<std::string>& primes, opnlab_mode mode,
                Format format) {
  auto ctx = make_context();
  std::vector<const char*> args;
  for (const auto& p : primes) args.push_back(p.c_str());
  opnlab_verdicts* raw = nullptr;
  check(opnlab_radical_screen(ctx.get(), args.data(), args.size(), mode, &raw));
  std::unique_ptr<opnlab_verdicts, VerdictsDeleter> verdicts(raw);
  return print_verdicts(raw, format);
}

int run_table(unsigned m_min, unsigned m_max, unsigned alpha, Format format) {
  auto ctx = make_context();
  if (m_min > m_max) {
    std::cerr << "error: --m-min must not exceed --m-max\n";
    return kExitError;
  }
  std::vector<opnlab_table_row> rows(m_max - m_min + 1);
  std::size_t written = 0;
  check(opnlab_table_generate(ctx.get(), m_min, m_max, alpha, rows.data(),
                              rows.size(), &written));
  rows.resize(written);

  switch (format) {
    case Format::Human:
      std::printf("alpha = %u\n%4s %8s %8s %8s %11s\n", alpha, "m", "p_I1",
                  "p_I2", "p_I3", "perisastri");
      for (const auto& r : rows) {
        std::printf("%4u %8llu %8llu %8llu %11llu\n", r.m,
                    static_cast<unsigned long long>(r.p_I1),
                    static_cast<unsigned long long>(r.p_I2),
                    static_cast<unsigned long long>(r.p_I3),
                    static_cast<unsigned long long>(r.perisastri));
      }
      break;
    case Format::Csv:
      std::cout << "m,p_I1,p_I2,p_I3,perisastri\n";
      for (const auto& r : rows) {
        std::cout << r.m << ',' << r.p_I1 << ',' << r.p_I2 << ',' << r.p_I3
                  << ',' << r.perisastri << "\n";
      }
      break;
    case Format::JsonLines:
      for (const auto& r : rows) {
        std::cout << Json{{"m", r.m},
                          {"p_I1", r.p_I1},
                          {"p_I2", r.p_I2},
                          {"p_I3", r.p_I3},
                          {"perisastri", r.perisastri}}
                         .dump()
                  << "\n";
      }
      break;
  }
  return kExitOk;
}

int run_constants(unsigned alpha, const std::string& width, Format format) {
  auto ctx = make_context();
  opnlab_enclosure* raw = nullptr;
  check(opnlab_threshold(ctx.get(), alpha, width.c_str(), &raw));
  std::unique_ptr<opnlab_enclosure, EnclosureDeleter> e(raw);

  switch (format) {
    case Format::Human:
      std::cout << "alpha   = " << alpha << "\n"
                << "lo      = " << opnlab_enclosure_lo(raw) << "\n"
                << "hi      = " << opnlab_enclosure_hi(raw) << "\n"
                << "width   = " << opnlab_enclosure_width(raw) << "\n"
                << "decimal = [" << opnlab_enclosure_lo_decimal(raw) << ", "
                << opnlab_enclosure_hi_decimal(raw) << "]\n";
      break;
    case Format::Csv:
      std::cout << "alpha,lo,hi,lo_decimal,hi_decimal\n"
                << alpha << ',' << opnlab_enclosure_lo(raw) << ','
                << opnlab_enclosure_hi(raw) << ','
                << opnlab_enclosure_lo_decimal(raw) << ','
                << opnlab_enclosure_hi_decimal(raw) << "\n";
      break;
    case Format::JsonLines:
      std::cout << Json{{"alpha", alpha},
                        {"lo", opnlab_enclosure_lo(raw)},
                        {"hi", opnlab_enclosure_hi(raw)},
                        {"lo_decimal", opnlab_enclosure_lo_decimal(raw)},
                        {"hi_decimal", opnlab_enclosure_hi_decimal(raw)}}
                       .dump()
                << "\n";
      break;
  }
  return kExitOk;
}

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"human", Format::Human},
                                        {"csv", Format::Csv},
                                        {"jsonl", Format::JsonLines}}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd perfect number necessary-condition toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", opnlab_version());

  Format format = Format::Human;
  unsigned alpha = 1;

  std::string sigma_input;
  auto* sigma_cmd = app.add_subcommand("sigma", "sigma(n), sigma_-1(n) and classification");
  sigma_cmd->add_option("n", sigma_input, "Integer or factorization like 3^3*5*7")
      ->required();
  add_format(sigma_cmd, format);

  std::string screen_input;
  auto* screen_cmd = app.add_subcommand("screen", "Run every necessary-condition check");
  screen_cmd->add_option("factorization", screen_input)->required();
  add_format(screen_cmd, format);

  std::vector<std::string> radical_primes;
  opnlab_mode mode = OPNLAB_MODE_AUTO;
  auto* radical_cmd =
      app.add_subcommand("radical", "Bound screens on the distinct primes alone");
  radical_cmd->add_option("primes", radical_primes, "Distinct odd primes");
  radical_cmd->add_option("--mode", mode, "auto, alpha1, alpha2 or alpha2-case2")
      ->transform(CLI::CheckedTransformer(std::map<std::string, opnlab_mode>{
          {"auto", OPNLAB_MODE_AUTO},
          {"alpha1", OPNLAB_MODE_ALPHA1},
          {"alpha2", OPNLAB_MODE_ALPHA2_CASE1},
          {"alpha2-case2", OPNLAB_MODE_ALPHA2_CASE2}}));
  add_format(radical_cmd, format);

  unsigned m_min = 9;
  unsigned m_max = 20;
  auto* table_cmd = app.add_subcommand("table", "Bounds on the three smallest prime factors");
  table_cmd->add_option("--m-min", m_min, "Smallest number of distinct primes");
  table_cmd->add_option("--m-max", m_max, "Largest number of distinct primes");
  table_cmd->add_option("--alpha", alpha, "Truncation order")->check(CLI::PositiveNumber);
  add_format(table_cmd, format);

  std::string width = "1e-30";
  auto* constants_cmd = app.add_subcommand("constants", "Certified threshold enclosure");
  constants_cmd->add_option("--alpha", alpha, "Truncation order")->check(CLI::PositiveNumber);
  constants_cmd->add_option("--width", width, "Maximum enclosure width");
  add_format(constants_cmd, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*sigma_cmd) return run_sigma(sigma_input, format);
    if (*screen_cmd) return run_screen(screen_input, format);
    if (*radical_cmd) return run_radical(radical_primes, mode, format);
    if (*table_cmd) return run_table(m_min, m_max, alpha, format);
    if (*constants_cmd) return run_constants(alpha, width, format);
  } catch (const Failure& f) {
    std::cerr << "error (" << opnlab_status_name(f.status)
              << "): " << opnlab_last_error() << "\n";
    return kExitError;
  }
  return kExitError;
}
