#include "sgs/canonical.hpp"

#include <cstdio>

namespace sgs {

namespace {

// Column k of a labeling holds one bit per earlier position j, most
// significant first: adjacency (1 = non-edge) and normalized sign (1 = negative).
class CertSearch {
 public:
  explicit CertSearch(const SignedGraph& g)
      : n_(g.order()),
        signs_(static_cast<std::size_t>(n_ * n_), 0),
        perm_(static_cast<std::size_t>(n_), -1),
        theta_(static_cast<std::size_t>(n_), 1),
        placed_(static_cast<std::size_t>(n_), false),
        adj_cols_(static_cast<std::size_t>(n_), 0),
        sign_cols_(static_cast<std::size_t>(n_), 0) {
    for (const Edge& e : g.edges()) {
      signs_[static_cast<std::size_t>(e.u * n_ + e.v)] = static_cast<std::int8_t>(e.sign);
      signs_[static_cast<std::size_t>(e.v * n_ + e.u)] = static_cast<std::int8_t>(e.sign);
    }
  }

  CanonicalCert run() {
    dfs(0);
    CanonicalCert cert;
    cert.bytes.push_back(static_cast<std::uint8_t>(n_));
    pack(best_adj_, cert.bytes);
    pack(best_sign_, cert.bytes);
    return cert;
  }

 private:
  int sign(Vertex a, Vertex b) const { return signs_[static_cast<std::size_t>(a * n_ + b)]; }

  int prefix_cmp(int k) const {
    for (int j = 0; j < k; ++j) {
      const auto a = adj_cols_[static_cast<std::size_t>(j)];
      const auto b = best_adj_[static_cast<std::size_t>(j)];
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  void dfs(int k) {
    if (k == n_) {
      leaf();
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (placed_[static_cast<std::size_t>(v)]) continue;
      std::uint64_t col = 0;
      int parent = -1;
      for (int j = 0; j < k; ++j) {
        if (sign(perm_[static_cast<std::size_t>(j)], v) == 0) {
          col |= std::uint64_t{1} << (k - 1 - j);
        } else if (parent < 0) {
          parent = j;
        }
      }
      if (have_best_) {
        const int c = prefix_cmp(k);
        if (c > 0) return;
        if (c == 0 && col > best_adj_[static_cast<std::size_t>(k)]) continue;
      }
      const int theta_v =
          parent < 0 ? 1
                     : theta_[static_cast<std::size_t>(parent)] *
                           sign(perm_[static_cast<std::size_t>(parent)], v);
      std::uint64_t scol = 0;
      for (int j = 0; j < k; ++j) {
        const int s = sign(perm_[static_cast<std::size_t>(j)], v);
        if (s * theta_[static_cast<std::size_t>(j)] * theta_v < 0) {
          scol |= std::uint64_t{1} << (k - 1 - j);
        }
      }
      perm_[static_cast<std::size_t>(k)] = v;
      theta_[static_cast<std::size_t>(k)] = theta_v;
      placed_[static_cast<std::size_t>(v)] = true;
      adj_cols_[static_cast<std::size_t>(k)] = col;
      sign_cols_[static_cast<std::size_t>(k)] = scol;
      dfs(k + 1);
      placed_[static_cast<std::size_t>(v)] = false;
    }
  }

  void leaf() {
    if (!have_best_ || adj_cols_ < best_adj_) {
      best_adj_ = adj_cols_;
      best_sign_ = sign_cols_;
      have_best_ = true;
    } else if (adj_cols_ == best_adj_ && sign_cols_ < best_sign_) {
      best_sign_ = sign_cols_;
    }
  }

  void pack(const std::vector<std::uint64_t>& cols, std::vector<std::uint8_t>& out) const {
    std::uint8_t byte = 0;
    int filled = 0;
    for (int k = 0; k < n_; ++k) {
      for (int j = 0; j < k; ++j) {
        const auto bit = (cols[static_cast<std::size_t>(k)] >> (k - 1 - j)) & 1U;
        byte = static_cast<std::uint8_t>((byte << 1) | bit);
        if (++filled == 8) {
          out.push_back(byte);
          byte = 0;
          filled = 0;
        }
      }
    }
    if (filled > 0) out.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
  }

  int n_;
  std::vector<std::int8_t> signs_;
  std::vector<Vertex> perm_;
  std::vector<int> theta_;
  std::vector<bool> placed_;
  std::vector<std::uint64_t> adj_cols_;
  std::vector<std::uint64_t> sign_cols_;
  std::vector<std::uint64_t> best_adj_;
  std::vector<std::uint64_t> best_sign_;
  bool have_best_ = false;
};

}  // namespace

std::string CanonicalCert::hex() const {
  std::string out;
  out.reserve(bytes.size() * 2);
  char buf[3];
  for (std::uint8_t b : bytes) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    out += buf;
  }
  return out;
}

CanonicalCert canonical_cert(const SignedGraph& g, int max_order) {
  if (g.order() > max_order || g.order() > kMaxDenseOrder) {
    throw Error(Errc::TooLarge, "canonical certificate supports order <= " +
                                    std::to_string(std::min(max_order, kMaxDenseOrder)) +
                                    ", got " + std::to_string(g.order()));
  }
  return CertSearch(g).run();
}

bool are_switching_isomorphic(const SignedGraph& a, const SignedGraph& b, int max_order) {
  if (a.order() != b.order() || a.size() != b.size()) {
    if (a.order() > max_order || b.order() > max_order) {
      throw Error(Errc::TooLarge, "canonical certificate bound exceeded");
    }
    return false;
  }
  return canonical_cert(a, max_order) == canonical_cert(b, max_order);
}

bool is_sign_symmetric(const SignedGraph& g, int max_order) {
  return are_switching_isomorphic(g, negate(g), max_order);
}

}  // namespace sgs
