#include "altperm/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "altperm/bijections.hpp"
#include "altperm/errors.hpp"
#include "altperm/oracle.hpp"

namespace altperm::cli {

namespace {

const std::vector<std::string> kMaps{"phi", "psi", "phi-bar", "psi-bar", "gamma", "delta"};

bool word_valued(const std::string& via) { return via == "phi" || via == "psi"; }

void print_tableau(std::ostream& out, const Tableau& t, const std::string& render) {
  if (render == "text") {
    out << render_text(t);
  } else {
    out << to_json(t).dump() << '\n';
  }
}

int do_map(const std::string& via, const std::string& perm_text, const std::string& render, std::ostream& out) {
  const Permutation p = parse_permutation(perm_text);
  if (via == "phi") {
    out << to_string(phi(p)) << '\n';
  } else if (via == "psi") {
    out << to_string(psi(p)) << '\n';
  } else if (via == "phi-bar") {
    print_tableau(out, phi_bar(p), render);
  } else if (via == "psi-bar") {
    print_tableau(out, psi_bar(p), render);
  } else if (via == "gamma") {
    print_tableau(out, gamma(p), render);
  } else {
    print_tableau(out, delta(p), render);
  }
  return 0;
}

int do_unmap(const std::string& via, const std::string& word_text, const std::string& tableau_text,
             std::ostream& out) {
  Permutation p;
  if (word_valued(via)) {
    if (word_text.empty()) throw ParseError("unmap --via " + via + " needs --word");
    const Word w = parse_word(word_text);
    p = via == "phi" ? phi_inverse(w) : psi_inverse(w);
  } else {
    if (tableau_text.empty()) throw ParseError("unmap --via " + via + " needs --tableau");
    const Tableau t = parse_tableau(tableau_text);
    if (via == "phi-bar") {
      p = phi_bar_inverse(t);
    } else if (via == "psi-bar") {
      p = psi_bar_inverse(t);
    } else if (via == "gamma") {
      p = gamma_inverse(t);
    } else {
      p = delta_inverse(t);
    }
  }
  out << to_string(p) << '\n';
  return 0;
}

int do_verify(int max_n, int limit, std::ostream& out, std::ostream& err) {
  auto reports = verify_theorems(max_n, limit);
  auto maps = verify_bijections(max_n, limit);
  reports.insert(reports.end(), maps.begin(), maps.end());
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out << to_json_line(r) << '\n';
    if (!r.agree) ++failed;
  }
  if (failed > 0) {
    err << "verify: " << failed << " of " << reports.size() << " reports disagree\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bijections between 4123-avoiding alternating permutations and standard Young tableaux"};
  app.name("altperm");
  app.require_subcommand(1, 1);

  std::string via, perm_text, word_text, tableau_text, render = "json";
  std::string cls_text, avoid_text = "4123", shape_text;
  int length = 0;
  int limit = kDefaultPermutationLimit;
  int max_n = 4;
  bool count_only = false;
  bool shifted = false;

  auto* map = app.add_subcommand("map", "Apply a bijection to a permutation");
  map->add_option("--via", via, "phi | psi | phi-bar | psi-bar | gamma | delta")
      ->required()
      ->check(CLI::IsMember(kMaps));
  map->add_option("--perm", perm_text, "Permutation, e.g. 63758142 or 6,3,7,5,8,1,4,2")->required();
  map->add_option("--render", render, "Tableau output: json | text")->check(CLI::IsMember({"json", "text"}));

  auto* unmap = app.add_subcommand("unmap", "Recover the permutation from a word or tableau");
  unmap->add_option("--via", via, "phi | psi | phi-bar | psi-bar | gamma | delta")
      ->required()
      ->check(CLI::IsMember(kMaps));
  auto* word_opt = unmap->add_option("--word", word_text, "Word over {1,2,3}");
  auto* tab_opt = unmap->add_option("--tableau", tableau_text, "Tableau JSON");
  word_opt->excludes(tab_opt);

  auto* enumerate = app.add_subcommand("enumerate", "List alternating permutations avoiding a pattern");
  enumerate->add_option("--class", cls_text, "ud | du")->required()->check(CLI::IsMember({"ud", "du"}));
  enumerate->add_option("--length", length, "Permutation length")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--avoid", avoid_text, "Pattern to avoid")->capture_default_str();
  enumerate->add_flag("--count-only", count_only, "Print only the number of permutations");
  enumerate->add_option("--limit", limit, "Enumeration safety cap")->capture_default_str();

  auto* count = app.add_subcommand("count", "Count standard tableaux of a shape");
  count->add_option("--shape", shape_text, "Parts, e.g. 5,5,5")->required();
  count->add_flag("--shifted", shifted, "Shifted shape");

  auto* verify = app.add_subcommand("verify", "Run the counting and bijection verification suites");
  verify->add_option("--max-n", max_n, "Largest n checked")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--limit", limit, "Enumeration safety cap")->capture_default_str();

  auto* render_cmd = app.add_subcommand("render", "Draw a tableau as text");
  auto* r_tab = render_cmd->add_option("--tableau", tableau_text, "Tableau JSON");
  auto* r_word = render_cmd->add_option("--word", word_text, "Word read through chi^{-1}");
  r_tab->excludes(r_word);
  render_cmd->add_flag("--shifted", shifted, "Interpret --word as a shifted tableau");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (map->parsed()) return do_map(via, perm_text, render, out);
    if (unmap->parsed()) return do_unmap(via, word_text, tableau_text, out);
    if (enumerate->parsed()) {
      const Alternation cls = parse_alternation(cls_text);
      const Permutation pattern = parse_permutation(avoid_text);
      if (count_only) {
        out << brute_count(length, cls, pattern, limit) << '\n';
      } else {
        for_each_avoider(length, cls, pattern, [&](const Permutation& p) { out << to_string(p) << '\n'; }, limit);
      }
      return 0;
    }
    if (count->parsed()) {
      const Shape s(parse_parts(shape_text), shifted ? ShapeKind::Shifted : ShapeKind::Ordinary);
      out << (shifted ? count_shifted_syt(s) : count_syt(s)) << '\n';
      return 0;
    }
    if (verify->parsed()) return do_verify(max_n, limit, out, err);
    if (render_cmd->parsed()) {
      if (!tableau_text.empty()) {
        out << render_text(parse_tableau(tableau_text));
      } else if (!word_text.empty()) {
        out << render_text(chi_inverse(parse_word(word_text), shifted ? ShapeKind::Shifted : ShapeKind::Ordinary));
      } else {
        throw ParseError("render needs --tableau or --word");
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace altperm::cli
