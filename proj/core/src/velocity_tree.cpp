#include "gyrosim/velocity_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gyrosim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxDepth = 48;
}  // namespace

VelocityTree::VelocityTree(const Ensemble& ens, int leaf_capacity, int order)
    : params_(ens.params),
      leaf_capacity_(std::max(1, leaf_capacity)),
      order_(std::max(4, order)) {
  if (ens.frame != Frame::GyroFrame) {
    throw std::runtime_error("VelocityTree: ensemble is not in the gyro frame");
  }
  const std::size_t n = ens.size();
  pos_.resize(n);
  vel_.resize(n);
  weight_.resize(n);
  orig_.resize(n);
  where_.resize(n);
  if (n == 0) return;

  // permutation-first build: sort orig_ into tree order, then gather
  std::vector<Vec2> opos(n), ovel(n);
  std::vector<double> ow(n);
  for (std::size_t i = 0; i < n; ++i) {
    opos[i] = ens.particles[i].pos;
    ovel[i] = ens.particles[i].vel;
    ow[i] = ens.particles[i].weight;
    orig_[i] = static_cast<std::uint32_t>(i);
  }

  Vec2 lo = opos[0], hi = opos[0];
  for (const Vec2& q : opos) {
    lo.x = std::min(lo.x, q.x);
    lo.y = std::min(lo.y, q.y);
    hi.x = std::max(hi.x, q.x);
    hi.y = std::max(hi.y, q.y);
  }
  const Vec2 box_center = 0.5 * (lo + hi);
  const double box_half =
      0.5 * std::max({hi.x - lo.x, hi.y - lo.y, 1e-300});

  // recursive partition works on orig_ only, looking positions up in opos
  struct Builder {
    VelocityTree& t;
    const std::vector<Vec2>& opos;
    int run(std::uint32_t first, std::uint32_t count, Vec2 bc, double bh, int depth) {
      const int idx = static_cast<int>(t.nodes_.size());
      t.nodes_.push_back({});
      t.nodes_[idx].first = first;
      t.nodes_[idx].count = count;
      if (count <= static_cast<std::uint32_t>(t.leaf_capacity_) || depth >= kMaxDepth) {
        return idx;
      }
      t.nodes_[idx].leaf = false;
      auto* b = t.orig_.data() + first;
      auto* e = b + count;
      auto* my = std::partition(b, e, [&](std::uint32_t a) { return opos[a].y < bc.y; });
      auto* mx_lo = std::partition(b, my, [&](std::uint32_t a) { return opos[a].x < bc.x; });
      auto* mx_hi = std::partition(my, e, [&](std::uint32_t a) { return opos[a].x < bc.x; });
      const std::uint32_t c0 = static_cast<std::uint32_t>(mx_lo - b);
      const std::uint32_t c1 = static_cast<std::uint32_t>(my - mx_lo);
      const std::uint32_t c2 = static_cast<std::uint32_t>(mx_hi - my);
      const std::uint32_t c3 = count - c0 - c1 - c2;
      const double h = 0.5 * bh;
      const std::uint32_t starts[4] = {first, first + c0, first + c0 + c1,
                                       first + c0 + c1 + c2};
      const std::uint32_t counts[4] = {c0, c1, c2, c3};
      const Vec2 centers[4] = {{bc.x - h, bc.y - h},
                               {bc.x + h, bc.y - h},
                               {bc.x - h, bc.y + h},
                               {bc.x + h, bc.y + h}};
      for (int q = 0; q < 4; ++q) {
        if (counts[q] == 0) continue;
        const int child = run(starts[q], counts[q], centers[q], h, depth + 1);
        t.nodes_[idx].child[q] = child;
      }
      return idx;
    }
  };
  Builder{*this, opos}.run(0, static_cast<std::uint32_t>(n), box_center, box_half, 0);

  for (std::size_t i = 0; i < n; ++i) {
    pos_[i] = opos[orig_[i]];
    vel_[i] = ovel[orig_[i]];
    weight_[i] = ow[orig_[i]];
    where_[orig_[i]] = static_cast<std::uint32_t>(i);
  }
  coef_.assign(nodes_.size() * static_cast<std::size_t>(order_), {0.0, 0.0});
  for (std::size_t m = 0; m < nodes_.size(); ++m) {
    nodes_[m].coef_offset = static_cast<std::uint32_t>(m * order_);
    summarize(static_cast<int>(m));
  }
}

void VelocityTree::summarize(int node_index) {
  Node& nd = nodes_[node_index];
  double w_sum = 0.0;
  Vec2 c{0.0, 0.0};
  for (std::uint32_t i = nd.first; i < nd.first + nd.count; ++i) {
    w_sum += weight_[i];
    c += weight_[i] * pos_[i];
  }
  nd.weight = w_sum;
  nd.center = c / w_sum;

  double r2 = 0.0;
  Vec2 vlo = vel_[nd.first], vhi = vel_[nd.first];
  for (std::uint32_t i = nd.first; i < nd.first + nd.count; ++i) {
    r2 = std::max(r2, norm_sq(pos_[i] - nd.center));
    vlo.x = std::min(vlo.x, vel_[i].x);
    vlo.y = std::min(vlo.y, vel_[i].y);
    vhi.x = std::max(vhi.x, vel_[i].x);
    vhi.y = std::max(vhi.y, vel_[i].y);
  }
  nd.radius = std::sqrt(r2);
  nd.vel_center = 0.5 * (vlo + vhi);
  double vr2 = 0.0;
  for (std::uint32_t i = nd.first; i < nd.first + nd.count; ++i) {
    vr2 = std::max(vr2, norm_sq(vel_[i] - nd.vel_center));
  }
  nd.vel_radius = std::sqrt(vr2);

  // multipole moments a_m = sum_k w_k (z_k - c)^m of the bare log kernel
  std::complex<double>* a = coef_.data() + nd.coef_offset;
  for (std::uint32_t i = nd.first; i < nd.first + nd.count; ++i) {
    const std::complex<double> d(pos_[i].x - nd.center.x, pos_[i].y - nd.center.y);
    std::complex<double> pw(1.0, 0.0);
    for (int m = 0; m < order_; ++m) {
      a[m] += weight_[i] * pw;
      pw *= d;
    }
  }
}

Vec2 VelocityTree::velocity_at(std::size_t target, double mac_theta,
                               Stats* stats) const {
  if (target >= pos_.size()) {
    throw std::out_of_range("VelocityTree::velocity_at: target out of range");
  }
  if (!(mac_theta >= 0.0) || mac_theta > 1.0) {
    throw std::invalid_argument("VelocityTree::velocity_at: mac_theta must be in [0, 1]");
  }
  const Vec2 xt = pos_[where_[target]];
  const Vec2 vt = vel_[where_[target]];
  const double wc = params_.omega_c;
  const double awc = std::abs(wc);
  const double delta = params_.delta;
  const double d2 = delta * delta;

  Vec2 vel{0.0, 0.0};
  int stack[4 * kMaxDepth + 8];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& nd = nodes_[stack[--top]];
    const Vec2 dx = xt - nd.center;
    const double dist = norm(dx);
    const double dv = norm(vt - nd.vel_center);
    const double r_max = (dv + nd.vel_radius) / awc;
    const double r_min = std::max(0.0, dv - nd.vel_radius) / awc;

    if (dist + nd.radius <= r_min) {
      // gate provably closed for every member pair
      if (stats) ++stats->closed_nodes;
      continue;
    }
    const bool gate_open = (dist - nd.radius) > r_max;
    const bool mac_ok = nd.radius < mac_theta * dist;
    const bool delta_ok = (delta == 0.0) || (dist - nd.radius) >= 1000.0 * delta;
    if (gate_open && mac_ok && delta_ok) {
      const std::complex<double> z(dx.x, dx.y);
      const std::complex<double>* a = coef_.data() + nd.coef_offset;
      std::complex<double> s(0.0, 0.0);
      for (int m = order_ - 1; m >= 0; --m) {
        s = (s + a[m]) / z;
      }
      const double f = -1.0 / (kTwoPi * wc);
      vel += f * Vec2{s.imag(), s.real()};  // perp sum = (i/2pi) conj(S)
      if (stats) ++stats->far_nodes;
      continue;
    }
    if (!nd.leaf) {
      for (int q = 0; q < 4; ++q) {
        if (nd.child[q] >= 0) stack[top++] = nd.child[q];
      }
      continue;
    }
    for (std::uint32_t i = nd.first; i < nd.first + nd.count; ++i) {
      if (orig_[i] == target) continue;
      const Vec2 xi = xt - pos_[i];
      const Vec2 eta = vt - vel_[i];
      const double gate2 = norm_sq(eta) / (wc * wc);
      const double xi2 = norm_sq(xi);
      if (xi2 > gate2) {
        vel += (weight_[i] / (kTwoPi * wc * (xi2 + d2))) * perp(xi);
      }
      if (stats) ++stats->direct_pairs;
    }
  }
  return vel;
}

}  // namespace gyrosim
