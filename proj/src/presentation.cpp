#include "igconn/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "igconn/error.hpp"
#include "igconn/group_io.hpp"

namespace igconn {

void Presentation::validate() const {
  if (generator_count <= 0) throw InputError("presentation needs at least one generator");
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (relators[r].empty()) throw InputError("relator " + std::to_string(r) + " is empty");
    for (int l : relators[r]) {
      if (l == 0 || std::abs(l) > generator_count) {
        throw InputError("relator " + std::to_string(r) + " uses an undefined generator");
      }
    }
  }
}

Word letter(int generator, long power) {
  Word w;
  const int base = power >= 0 ? generator + 1 : -(generator + 1);
  for (long i = 0; i < std::labs(power); ++i) w.push_back(base);
  return w;
}

Word concat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word relation(const Word& lhs, const Word& rhs) { return concat({lhs, inverse(rhs)}); }

namespace {

class CosetTable {
 public:
  CosetTable(int gens, std::size_t max_cosets)
      : cols_(2 * static_cast<std::size_t>(gens)), max_cosets_(max_cosets) {
    new_coset();
  }

  static std::size_t column(int l) {
    return l > 0 ? 2 * static_cast<std::size_t>(l - 1) : 2 * static_cast<std::size_t>(-l - 1) + 1;
  }
  static std::size_t inv(std::size_t col) { return col ^ 1U; }

  std::int32_t& at(std::int32_t c, std::size_t col) {
    return table_[static_cast<std::size_t>(c) * cols_ + col];
  }
  bool live(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  std::size_t defined() const { return parent_.size(); }
  std::size_t cols() const { return cols_; }

  void define(std::int32_t c, std::size_t col) {
    const auto d = new_coset();
    at(c, col) = d;
    at(d, inv(col)) = c;
  }

  void scan_and_fill(std::int32_t alpha, const std::vector<std::size_t>& w) {
    std::int32_t f = alpha;
    std::int32_t b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    while (true) {
      while (i < j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, inv(w[j - 1])) >= 0) {
        b = at(b, inv(w[j - 1]));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, inv(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(c)] != root) {
      const auto next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

 private:
  std::int32_t new_coset() {
    if (parent_.size() >= max_cosets_) {
      throw CapExceeded("coset enumeration exceeded " + std::to_string(max_cosets_) +
                        " cosets; the presentation may define a larger or infinite group");
    }
    const auto d = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(d);
    table_.resize(table_.size() + cols_, -1);
    return d;
  }

  void merge(std::int32_t k, std::int32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    const auto mu = std::min(k, l);
    const auto nu = std::max(k, l);
    parent_[static_cast<std::size_t>(nu)] = mu;
    queue_.push_back(nu);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const auto gamma = queue_[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        const auto delta = at(gamma, x);
        if (delta < 0) continue;
        at(delta, inv(x)) = -1;
        const auto mu = rep(gamma);
        const auto nu = rep(delta);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x));
        } else if (at(nu, inv(x)) >= 0) {
          merge(mu, at(nu, inv(x)));
        } else {
          at(mu, x) = nu;
          at(nu, inv(x)) = mu;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
};

}  // namespace

CosetEnumeration todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  p.validate();
  CosetTable t(p.generator_count, max_cosets);
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : p.relators) {
    std::vector<std::size_t> cols;
    for (int l : r) cols.push_back(CosetTable::column(l));
    rels.push_back(std::move(cols));
  }
  for (std::int32_t c = 0; static_cast<std::size_t>(c) < t.defined(); ++c) {
    for (const auto& r : rels) {
      if (!t.live(c)) break;
      t.scan_and_fill(c, r);
    }
    if (!t.live(c)) continue;
    for (std::size_t x = 0; x < t.cols(); ++x) {
      if (t.at(c, x) < 0) t.define(c, x);
    }
  }

  std::vector<std::int32_t> renumber(t.defined(), -1);
  std::size_t n = 0;
  for (std::size_t c = 0; c < t.defined(); ++c) {
    if (t.live(static_cast<std::int32_t>(c))) renumber[c] = static_cast<std::int32_t>(n++);
  }
  const auto k = static_cast<std::size_t>(p.generator_count);
  std::vector<std::uint32_t> right_mult(n * k);
  for (std::size_t c = 0; c < t.defined(); ++c) {
    const auto ci = static_cast<std::int32_t>(c);
    if (!t.live(ci)) continue;
    for (std::size_t g = 0; g < k; ++g) {
      const auto target = t.at(ci, 2 * g);
      if (target < 0) throw InputError("coset table incomplete after enumeration");
      right_mult[static_cast<std::size_t>(renumber[c]) * k + g] =
          static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(t.rep(target))]);
    }
  }
  auto group = FiniteGroup::from_right_action(n, k, right_mult);
  std::vector<std::uint32_t> gens(k);
  for (std::size_t g = 0; g < k; ++g) gens[g] = right_mult[g];

  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    std::uint32_t acc = group.identity();
    for (int l : p.relators[r]) {
      const auto x = gens[static_cast<std::size_t>(std::abs(l) - 1)];
      acc = group.mul(acc, l > 0 ? x : group.inv(x));
    }
    if (acc != group.identity()) {
      throw InputError("relator " + std::to_string(r) + " fails in the enumerated group");
    }
  }
  return {std::move(group), std::move(gens), t.defined()};
}

namespace {

void append_power(Word& w, int gen1, long power) {
  const int base = power >= 0 ? gen1 : -gen1;
  for (long i = 0; i < std::labs(power); ++i) w.push_back(base);
}

Word parse_word(std::string_view s, int gens, std::size_t lineno) {
  Word w;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("line " + std::to_string(lineno) + ": " + why);
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected character '") + c + "'");
    const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    const int g = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
    if (g > gens) fail(std::string("generator '") + c + "' beyond declared count");
    ++i;
    long power = 1;
    std::size_t j = i;
    if (j < s.size() && s[j] == '^') ++j;
    bool neg = false;
    if (j < s.size() && s[j] == '-') {
      neg = true;
      ++j;
    }
    if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
      long v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        v = v * 10 + (s[j] - '0');
        if (v > 1'000'000) fail("exponent too large");
        ++j;
      }
      power = neg ? -v : v;
      i = j;
    } else if (j != i) {
      fail("exponent marker without digits");
    }
    append_power(w, g, upper ? -power : power);
  }
  return w;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) continue;
    if (!have_header) {
      std::istringstream hs{std::string(line)};
      std::string kw;
      int k = 0;
      if (!(hs >> kw >> k) || kw != "gens" || k <= 0 || k > 26) {
        throw InputError("line " + std::to_string(lineno) + ": expected 'gens k' with 1 <= k <= 26");
      }
      p.generator_count = k;
      have_header = true;
      continue;
    }
    Word w;
    if (auto eq = line.find('='); eq != std::string_view::npos) {
      w = relation(parse_word(line.substr(0, eq), p.generator_count, lineno),
                   parse_word(line.substr(eq + 1), p.generator_count, lineno));
    } else {
      w = parse_word(line, p.generator_count, lineno);
    }
    if (w.empty()) throw InputError("line " + std::to_string(lineno) + ": empty relator");
    p.relators.push_back(std::move(w));
  }
  if (!have_header) throw InputError("presentation lacks a 'gens k' line");
  p.validate();
  return p;
}

Presentation read_presentation_file(const std::filesystem::path& path) {
  try {
    return parse_presentation(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << ' ';
    first = false;
    os << static_cast<char>('a' + std::abs(w[i]) - 1);
    const long run = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

}  // namespace igconn
