// Acceptance suite: runs the whole verification battery and reports one
// line per criterion (plus the per-entry breakdown on failure).
// Exit code 0 iff every entry is in its expected state.

#include "ncj/suite.hpp"

#include <iostream>
#include <map>

int main() {
  using namespace ncj;
  SuiteReport rep = run_paper_suite();

  static const std::map<std::string, std::string> criteria = {
      {"c01", "identity battery over the (alpha,beta,gamma) grid"},
      {"c02", "mutation laws"},
      {"c03", "Peirce battery"},
      {"c04", "section 4.1 module relations and decomposition"},
      {"c05", "D_0 degenerations"},
      {"c06", "R+/R- route: d0r- expressions and sl2"},
      {"c07", "V modules over D_{-1}(1/2,1/2,0)"},
      {"c08", "derivations of D_t"},
      {"c09", "Kronecker round trips"},
      {"c10", "Q(1) and Q(2)"},
      {"c11", "Jordan-reduction instances"},
      {"c12", "K_10 / K_9 structure"},
      {"c13", "classification lemma instances"},
      {"c14", "indicator instances"},
  };

  std::map<std::string, std::pair<int, int>> tally;  // prefix -> (ok, total)
  for (const auto& e : rep.entries) {
    std::string prefix = e.id.substr(0, 3);
    tally[prefix].first += e.ok();
    tally[prefix].second += 1;
  }

  bool all_ok = true;
  int num = 1;
  for (const auto& [prefix, name] : criteria) {
    auto it = tally.find(prefix);
    int ok = it == tally.end() ? 0 : it->second.first;
    int total = it == tally.end() ? 0 : it->second.second;
    bool good = total > 0 && ok == total;
    all_ok = all_ok && good;
    std::cout << (good ? "PASS" : "FAIL") << " criterion " << num++ << ": " << name << " (" << ok << "/" << total
              << " checks)\n";
  }
  for (const auto& e : rep.entries)
    if (!e.ok()) std::cout << "  failing entry [" << e.id << "] " << e.verdict << " " << e.detail << "\n";
  std::cout << (all_ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
  return all_ok ? 0 : 1;
}
