// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 cohort-miner developers

#include "core/stemmer.hpp"

namespace cohortminer {
namespace {

// State over the word buffer: b[0..k] is the live region, j marks the stem
// end while a suffix is under consideration. Mirrors the reference code.
struct PorterState {
  std::string b;
  int k = 0;  // last live character
  int j = 0;  // stem end for the current suffix

  bool cons(int i) const {
    switch (b[static_cast<std::size_t>(i)]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j; ++i)
      if (!cons(i)) return true;
    return false;
  }

  bool doublec(int i) const {
    if (i < 1) return false;
    if (b[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i - 1)]) return false;
    return cons(i);
  }

  // consonant-vowel-consonant ending at i, final consonant not w/x/y.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char ch = b[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k + 1) return false;
    if (b.compare(static_cast<std::size_t>(k - len + 1), static_cast<std::size_t>(len),
                  s) != 0)
      return false;
    j = k - len;
    return true;
  }

  void set_to(std::string_view s) {
    b.replace(static_cast<std::size_t>(j + 1), std::string::npos, s);
    k = j + static_cast<int>(s.size());
  }

  void r(std::string_view s) {
    if (m() > 0) set_to(s);
  }
};

// step 1: plurals and -ed/-ing.
void step1ab(PorterState& z) {
  if (z.b[static_cast<std::size_t>(z.k)] == 's') {
    if (z.ends("sses"))
      z.k -= 2;
    else if (z.ends("ies"))
      z.set_to("i");
    else if (z.b[static_cast<std::size_t>(z.k - 1)] != 's')
      --z.k;
  }
  if (z.ends("eed")) {
    if (z.m() > 0) --z.k;
  } else if ((z.ends("ed") || z.ends("ing")) && z.vowel_in_stem()) {
    z.k = z.j;
    if (z.ends("at"))
      z.set_to("ate");
    else if (z.ends("bl"))
      z.set_to("ble");
    else if (z.ends("iz"))
      z.set_to("ize");
    else if (z.doublec(z.k)) {
      --z.k;
      char ch = z.b[static_cast<std::size_t>(z.k)];
      if (ch == 'l' || ch == 's' || ch == 'z') ++z.k;
    } else if (z.m() == 1 && z.cvc(z.k)) {
      z.set_to("e");
    }
  }
}

void step1c(PorterState& z) {
  if (z.ends("y") && z.vowel_in_stem()) z.b[static_cast<std::size_t>(z.k)] = 'i';
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

bool apply_first(PorterState& z, std::initializer_list<Rule> rules) {
  for (const Rule& rule : rules) {
    if (z.ends(rule.suffix)) {
      z.r(rule.replacement);
      return true;
    }
  }
  return false;
}

void step2(PorterState& z) {
  switch (z.b[static_cast<std::size_t>(z.k - 1)]) {
    case 'a':
      apply_first(z, {{"ational", "ate"}, {"tional", "tion"}});
      break;
    case 'c':
      apply_first(z, {{"enci", "ence"}, {"anci", "ance"}});
      break;
    case 'e':
      apply_first(z, {{"izer", "ize"}});
      break;
    case 'l':
      apply_first(z, {{"bli", "ble"},
                      {"alli", "al"},
                      {"entli", "ent"},
                      {"eli", "e"},
                      {"ousli", "ous"}});
      break;
    case 'o':
      apply_first(z, {{"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}});
      break;
    case 's':
      apply_first(z, {{"alism", "al"},
                      {"iveness", "ive"},
                      {"fulness", "ful"},
                      {"ousness", "ous"}});
      break;
    case 't':
      apply_first(z, {{"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}});
      break;
    case 'g':
      apply_first(z, {{"logi", "log"}});
      break;
    default:
      break;
  }
}

void step3(PorterState& z) {
  switch (z.b[static_cast<std::size_t>(z.k)]) {
    case 'e':
      apply_first(z, {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}});
      break;
    case 'i':
      apply_first(z, {{"iciti", "ic"}});
      break;
    case 'l':
      apply_first(z, {{"ical", "ic"}, {"ful", ""}});
      break;
    case 's':
      apply_first(z, {{"ness", ""}});
      break;
    default:
      break;
  }
}

// step 4: strip residual suffixes when m() > 1.
void step4(PorterState& z) {
  switch (z.b[static_cast<std::size_t>(z.k - 1)]) {
    case 'a':
      if (z.ends("al")) break;
      return;
    case 'c':
      if (z.ends("ance") || z.ends("ence")) break;
      return;
    case 'e':
      if (z.ends("er")) break;
      return;
    case 'i':
      if (z.ends("ic")) break;
      return;
    case 'l':
      if (z.ends("able") || z.ends("ible")) break;
      return;
    case 'n':
      if (z.ends("ant") || z.ends("ement") || z.ends("ment") || z.ends("ent")) break;
      return;
    case 'o':
      if (z.ends("ion") &&
          (z.b[static_cast<std::size_t>(z.j)] == 's' ||
           z.b[static_cast<std::size_t>(z.j)] == 't'))
        break;
      if (z.ends("ou")) break;
      return;
    case 's':
      if (z.ends("ism")) break;
      return;
    case 't':
      if (z.ends("ate") || z.ends("iti")) break;
      return;
    case 'u':
      if (z.ends("ous")) break;
      return;
    case 'v':
      if (z.ends("ive")) break;
      return;
    case 'z':
      if (z.ends("ize")) break;
      return;
    default:
      return;
  }
  if (z.m() > 1) z.k = z.j;
}

void step5(PorterState& z) {
  z.j = z.k;
  if (z.b[static_cast<std::size_t>(z.k)] == 'e') {
    int a = z.m();
    if (a > 1 || (a == 1 && !z.cvc(z.k - 1))) --z.k;
  }
  if (z.b[static_cast<std::size_t>(z.k)] == 'l' && z.doublec(z.k) && z.m() > 1) --z.k;
}

}  // namespace

std::string porter_stem(std::string_view word) {
  for (char c : word)
    if (c < 'a' || c > 'z') return std::string(word);
  if (word.size() <= 2) return std::string(word);

  PorterState z;
  z.b = word;
  z.k = static_cast<int>(word.size()) - 1;
  step1ab(z);
  if (z.k > 0) {
    step1c(z);
    step2(z);
    step3(z);
    step4(z);
    step5(z);
  }
  z.b.resize(static_cast<std::size_t>(z.k) + 1);
  return z.b;
}

}  // namespace cohortminer
