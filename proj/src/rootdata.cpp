#include "cellred/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "cellred/error.hpp"

namespace cellred {

namespace {

bool supported(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1 && rank <= 4;
    case 'B': return rank == 2;
    case 'G': return rank == 2;
    default: return false;
  }
}

// cartan[i][j] = <alpha_i^vee, alpha_j>. For B2 and G2 the off-diagonal
// placement is the one under which the printed dimension closed forms hold
// with (a, b) = (n1 + 1, n2 + 1); verify_conventions() enforces it.
std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  const int r = t.rank();
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  switch (t.family()) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      break;
    case 'B':
      a[0][1] = -2;
      a[1][0] = -1;
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

Integer eval_closed_form(const CartanType& t, const std::vector<std::int64_t>& n) {
  // (a, b, c) = coordinates + 1
  const Integer a = n[0] + 1;
  const Integer b = t.rank() > 1 ? Integer(n[1] + 1) : Integer(0);
  if (t.family() == 'A' && t.rank() == 1) return a;
  if (t.family() == 'A' && t.rank() == 2) return a * b * (a + b) / 2;
  if (t.family() == 'B') return a * b * (a + b) * (a + 2 * b) / 6;
  if (t.family() == 'G') return a * b * (a + b) * (a + 2 * b) * (a + 3 * b) * (2 * a + 3 * b) / 120;
  const Integer c = n[2] + 1;
  return a * b * c * (a + b) * (b + c) * (a + b + c) / 12;  // A3
}

void verify_conventions(const RootSystem& rs) {
  if (rs.type.family() == 'A' && rs.rank() == 4) return;
  std::vector<std::int64_t> n(rs.rank(), 0);
  for (int k = 0; k < 64; ++k) {
    for (int i = 0; i < rs.rank(); ++i) n[i] = (k >> (2 * i)) & 3;
    if (weyl_dim(rs, Weight{n}) != eval_closed_form(rs.type, n))
      throw std::logic_error("root datum convention for " + rs.type.name() +
                             " does not reproduce the dimension closed form");
  }
}

}  // namespace

CartanType::CartanType(char family, int rank)
    : family_(static_cast<char>(std::toupper(static_cast<unsigned char>(family)))), rank_(rank) {
  if (!supported(family_, rank_))
    throw Error(Errc::UnsupportedType, std::string(1, family) + std::to_string(rank));
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() != 2 || !std::isdigit(static_cast<unsigned char>(text[1])))
    throw Error(Errc::UnsupportedType, std::string(text));
  return CartanType(text[0], text[1] - '0');
}

const std::vector<CartanType>& CartanType::all() {
  static const std::vector<CartanType> types = {
      CartanType('A', 1), CartanType('A', 2), CartanType('A', 3),
      CartanType('A', 4), CartanType('B', 2), CartanType('G', 2)};
  return types;
}

std::string CartanType::name() const { return std::string(1, family_) + std::to_string(rank_); }

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c >= 0; });
}

bool Weight::is_restricted(std::int64_t p) const {
  return std::all_of(coords.begin(), coords.end(),
                     [p](std::int64_t c) { return c >= 0 && c <= p - 1; });
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

Weight subset_weight(int rank, const std::vector<int>& subset) {
  Weight w{std::vector<std::int64_t>(rank, 0)};
  for (int i : subset) w.coords.at(i) = 1;
  return w;
}

RootSystem build_root_system(const CartanType& type) {
  RootSystem rs{type, cartan_matrix(type), {}, {}, {}};
  const int r = type.rank();
  const auto& a = rs.cartan;

  // Closure of the simple (root, coroot) pairs under simple reflections.
  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
  // s_i(gamma) = gamma - <alpha_i, gamma> alpha_i^vee
  using Pair = std::pair<std::vector<int>, std::vector<int>>;
  std::vector<Pair> frontier;
  std::map<std::vector<int>, std::vector<int>> found;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    frontier.emplace_back(e, e);
    found.emplace(e, e);
  }
  while (!frontier.empty()) {
    std::vector<Pair> next;
    for (const auto& [root, coroot] : frontier) {
      for (int i = 0; i < r; ++i) {
        int pr = 0, pc = 0;
        for (int j = 0; j < r; ++j) {
          pr += root[j] * a[i][j];
          pc += coroot[j] * a[j][i];
        }
        std::vector<int> nr = root, nc = coroot;
        nr[i] -= pr;
        nc[i] -= pc;
        if (std::any_of(nr.begin(), nr.end(), [](int c) { return c < 0; })) continue;
        if (found.emplace(nr, nc).second) next.emplace_back(nr, nc);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [root, coroot] : found) {
    rs.positive_roots.push_back(root);
    rs.coroot_pairings.push_back(coroot);
    int sum = 0;
    for (int c : coroot) sum += c;
    rs.weyl_vector_pairings.push_back(sum);
  }

  static std::once_flag checked[6];
  const auto& all = CartanType::all();
  const auto idx = std::find(all.begin(), all.end(), type) - all.begin();
  std::call_once(checked[idx], [&rs] { verify_conventions(rs); });
  return rs;
}

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank() || !lambda.is_dominant())
    throw Error(Errc::NonDominantWeight, lambda.str());
  Integer num = 1, den = 1;
  for (std::size_t k = 0; k < rs.coroot_pairings.size(); ++k) {
    Integer pairing = 0;
    for (int i = 0; i < rs.rank(); ++i)
      pairing += Integer(rs.coroot_pairings[k][i]) * (lambda.coords[i] + 1);
    num *= pairing;
    den *= rs.weyl_vector_pairings[k];
  }
  return num / den;
}

}  // namespace cellred
