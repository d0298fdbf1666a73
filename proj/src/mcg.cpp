#include "cork/mcg.hpp"

#include "cork/error.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace cork::mcg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

IntVector basis(int genus, int k) {
  IntVector v = IntVector::Zero(2 * genus);
  v(k) = 1;
  return v;
}

void require_genus(int genus) {
  if (genus < 1) throw PreconditionError("genus must be at least 1");
}

// Reduction state: v and the accumulated transform T with T c = v.
struct Reducer {
  IntVector v;
  IntMatrix t;

  void apply(const IntMatrix& e) {
    v = e * v;
    t = e * t;
  }
  Eigen::Index n() const { return v.size(); }

  // a_i += k b_i on pair i.
  void shear(Eigen::Index i, std::int64_t k) {
    IntMatrix e = identity_matrix(n());
    e(2 * i, 2 * i + 1) = k;
    apply(e);
  }
  // (a_i, b_i) -> (b_i, -a_i).
  void rotate(Eigen::Index i) {
    IntMatrix e = IntMatrix::Zero(n(), n());
    e.diagonal().setOnes();
    e(2 * i, 2 * i) = 0;
    e(2 * i + 1, 2 * i + 1) = 0;
    e(2 * i, 2 * i + 1) = 1;
    e(2 * i + 1, 2 * i) = -1;
    apply(e);
  }
  // a_i += k a_j, b_j -= k b_i: the block diag(A, A^{-T}) for A = I + k E_ij.
  void mix(Eigen::Index i, Eigen::Index j, std::int64_t k) {
    IntMatrix e = identity_matrix(n());
    e(2 * i, 2 * j) = k;
    e(2 * j + 1, 2 * i + 1) = -k;
    apply(e);
  }
};

}  // namespace

Curve make_curve(std::string name, IntVector h1) {
  if (h1.size() == 0 || h1.size() % 2 != 0) throw PreconditionError("curve '" + name + "' needs an even-length class");
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < h1.size(); ++i) g = std::gcd(g, h1(i));
  if (g != 1) throw PreconditionError("curve '" + name + "' is not primitive (gcd " + std::to_string(g) + ")");
  return {std::move(name), std::move(h1)};
}

bool TwistWord::positive() const {
  for (const auto& l : letters)
    if (l.exponent != 1) return false;
  return true;
}

TwistWord TwistWord::then(const TwistWord& other) const {
  if (other.genus != genus) throw PreconditionError("words live on surfaces of different genus");
  TwistWord w = *this;
  w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
  return w;
}

std::int64_t pairing(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) throw PreconditionError("pairing needs classes of equal even length");
  std::int64_t s = 0;
  for (Eigen::Index i = 0; i + 1 < u.size(); i += 2) s += u(i) * v(i + 1) - u(i + 1) * v(i);
  return s;
}

IntMatrix transvection(const IntVector& c) {
  make_curve("", c);
  const auto n = c.size();
  IntMatrix m = identity_matrix(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto p = pairing(basis(static_cast<int>(n / 2), static_cast<int>(k)), c);
    m.col(k) += p * c;
  }
  return m;
}

IntMatrix letter_action(const Letter& l) {
  if (l.exponent == 1) return transvection(l.curve.h1);
  if (l.exponent == -1) return symplectic_inverse(transvection(l.curve.h1));
  throw PreconditionError("twist exponents must be +1 or -1");
}

IntMatrix h1_action(const TwistWord& w) {
  IntMatrix m = identity_matrix(2 * w.genus);
  for (const auto& l : w.letters) {
    if (l.curve.genus() != w.genus) throw PreconditionError("letter '" + l.curve.name + "' lives on another surface");
    m = letter_action(l) * m;
  }
  return m;
}

std::vector<Curve> chain_curves(int genus) {
  require_genus(genus);
  std::vector<Curve> out;
  for (int i = 0; i < genus; ++i) {
    IntVector a = basis(genus, 2 * i);
    if (i > 0) a -= basis(genus, 2 * (i - 1));
    out.push_back({"beta" + std::to_string(2 * i + 1), a});
    out.push_back({"beta" + std::to_string(2 * i + 2), basis(genus, 2 * i + 1)});
  }
  return out;
}

int chain_exponent(int genus) { return 4 * genus + 2; }

TwistWord chain_word(int genus, int power) {
  const auto betas = chain_curves(genus);
  TwistWord w{genus, {}};
  for (int p = 0; p < power; ++p)
    for (const auto& b : betas) w.letters.push_back({b, 1});
  return w;
}

bool verify_chain_relation(int genus) {
  // Power of the single chain product; cheaper than multiplying every letter.
  const IntMatrix step = h1_action(chain_word(genus, 1));
  IntMatrix m = identity_matrix(2 * genus);
  for (int p = 0; p < chain_exponent(genus); ++p) m = step * m;
  return is_identity(m);
}

IntMatrix identify_with_beta1(const Curve& c) {
  const auto checked = make_curve(c.name, c.h1);
  const Eigen::Index g = checked.h1.size() / 2;
  Reducer r{checked.h1, identity_matrix(2 * g)};

  for (Eigen::Index i = 0; i < g; ++i)
    while (r.v(2 * i + 1) != 0) {
      const std::int64_t q = r.v(2 * i) / r.v(2 * i + 1);
      r.shear(i, -q);
      r.rotate(i);
    }
  // Euclid across the a-coordinates; b-coordinates are all zero now.
  while (true) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = 0; i < g; ++i)
      if (r.v(2 * i) != 0 && (pivot < 0 || std::abs(r.v(2 * i)) < std::abs(r.v(2 * pivot)))) pivot = i;
    bool reduced = true;
    for (Eigen::Index i = 0; i < g; ++i)
      if (i != pivot && r.v(2 * i) != 0) {
        r.mix(i, pivot, -(r.v(2 * i) / r.v(2 * pivot)));
        reduced = false;
      }
    if (reduced) {
      if (pivot != 0) {
        // Move the unit to pair 0: a_0 += a_p, then clear a_p.
        r.mix(0, pivot, 1);
        r.mix(pivot, 0, -r.v(2 * pivot) / r.v(0));
      }
      break;
    }
  }
  if (r.v(0) == -1) {
    r.rotate(0);
    r.rotate(0);
  }
  const IntMatrix s = symplectic_inverse(r.t);
  if (r.v != basis(static_cast<int>(g), 0) || !is_symplectic(s) || s.col(0) != checked.h1)
    throw Error("internal: symplectic extension of '" + c.name + "' failed");
  return s;
}

std::size_t positive_inverse_length(int genus) {
  return static_cast<std::size_t>(2 * genus * chain_exponent(genus) - 1);
}

TwistWord positive_inverse(const Curve& c) {
  const IntMatrix s = identify_with_beta1(c);
  const int g = c.genus();
  const auto betas = chain_curves(g);
  const std::string base = c.name.empty() ? "c" : c.name;
  std::vector<Curve> image;
  for (const auto& b : betas) image.push_back({base + "~" + b.name, s * b.h1});
  image[0].name = c.name.empty() ? base : c.name;

  TwistWord w{g, {}};
  const auto total = positive_inverse_length(g) + 1;
  for (std::size_t k = 1; k < total; ++k) w.letters.push_back({image[k % betas.size()], 1});
  return w;
}

TwistWord trivialize(const TwistWord& w) {
  if (!w.positive()) throw PreconditionError("trivialize needs a positive word");
  TwistWord out{w.genus, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = out.then(positive_inverse(it->curve));
  return out;
}

// ---------------------------------------------------------------------------
// Documents

TwistWord parse_word(std::string_view text) {
  std::optional<int> genus;
  std::map<std::string, IntVector> curves;
  std::vector<std::pair<std::string, int>> tokens;
  std::vector<std::size_t> token_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto content = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (content.empty()) continue;
    if (content.rfind("genus", 0) == 0) {
      try {
        genus = std::stoi(std::string(trim(content.substr(5))));
      } catch (const std::exception&) {
        throw ParseError("genus needs an integer", line, 1);
      }
      if (*genus < 1) throw ParseError("genus must be at least 1", line, 1);
      continue;
    }
    if (content.rfind("curve ", 0) == 0) {
      const auto eq = content.find('=');
      const auto open = content.find('[');
      const auto close = content.find(']');
      if (eq == std::string_view::npos || open == std::string_view::npos || close == std::string_view::npos ||
          open < eq || close < open)
        throw ParseError("curve needs 'curve <name> = [a1,...,a2g]'", line, 1);
      const std::string name(trim(content.substr(6, eq - 6)));
      if (name.empty()) throw ParseError("curve needs a name", line, 1);
      std::vector<std::int64_t> entries;
      std::istringstream list{std::string(content.substr(open + 1, close - open - 1))};
      std::string item;
      while (std::getline(list, item, ',')) {
        try {
          std::size_t used = 0;
          const auto t = std::string(trim(item));
          entries.push_back(std::stoll(t, &used));
          if (used != t.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw ParseError("curve entries must be integers", line, open + 2);
        }
      }
      IntVector v(static_cast<Eigen::Index>(entries.size()));
      for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
      if (v.size() == 0 || v.size() % 2) throw ParseError("curve '" + name + "' needs an even number of entries", line, 1);
      if (!genus) genus = static_cast<int>(v.size() / 2);
      if (v.size() != 2 * *genus) throw ParseError("curve '" + name + "' has the wrong length for the genus", line, 1);
      curves[name] = v;
      continue;
    }
    std::size_t i = 0;
    while (i < content.size()) {
      if (std::isspace(static_cast<unsigned char>(content[i]))) {
        ++i;
        continue;
      }
      int exponent = 1;
      std::size_t j = i;
      if (content[j] != 'T') throw ParseError("expected T(name) or T'(name)", line, i + 1);
      ++j;
      if (j < content.size() && content[j] == '\'') {
        exponent = -1;
        ++j;
      }
      if (j >= content.size() || content[j] != '(') throw ParseError("expected '(' after T", line, j + 1);
      const auto close = content.find(')', j);
      if (close == std::string_view::npos) throw ParseError("unterminated twist token", line, i + 1);
      tokens.push_back({std::string(trim(content.substr(j + 1, close - j - 1))), exponent});
      token_lines.push_back(line);
      i = close + 1;
    }
  }
  TwistWord w{genus.value_or(1), {}};
  for (const auto& b : chain_curves(w.genus)) curves.try_emplace(b.name, b.h1);
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    auto it = curves.find(tokens[k].first);
    if (it == curves.end()) throw ParseError("undeclared curve '" + tokens[k].first + "'", token_lines[k], 1);
    try {
      w.letters.push_back({make_curve(it->first, it->second), tokens[k].second});
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), token_lines[k], 1);
    }
  }
  return w;
}

std::string write_word(const TwistWord& w) {
  std::ostringstream out;
  out << "genus " << w.genus << '\n';
  std::map<std::string, IntVector> declared;
  for (const auto& l : w.letters) {
    if (declared.count(l.curve.name)) continue;
    declared[l.curve.name] = l.curve.h1;
    out << "curve " << l.curve.name << " = [";
    for (Eigen::Index i = 0; i < l.curve.h1.size(); ++i) out << (i ? "," : "") << l.curve.h1(i);
    out << "]\n";
  }
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const auto& l = w.letters[k];
    out << (l.exponent == 1 ? "T(" : "T'(") << l.curve.name << ')' << ((k + 1) % 8 == 0 || k + 1 == w.letters.size() ? '\n' : ' ');
  }
  return out.str();
}

nlohmann::ordered_json to_json(const TwistWord& w) {
  nlohmann::ordered_json letters = nlohmann::ordered_json::array();
  for (const auto& l : w.letters) {
    std::vector<std::int64_t> h(l.curve.h1.data(), l.curve.h1.data() + l.curve.h1.size());
    letters.push_back({{"curve", l.curve.name}, {"h1", h}, {"exponent", l.exponent}});
  }
  return {{"genus", w.genus}, {"length", w.letters.size()}, {"letters", letters}};
}

}  // namespace cork::mcg
