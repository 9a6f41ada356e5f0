#include "bimatrix/comm.hpp"

#include <algorithm>
#include <cmath>

#include "bimatrix/apxne.hpp"
#include "bimatrix/wsne.hpp"
#include "bimatrix/zerosum.hpp"

namespace bimatrix {

Endpoint row_endpoint(const BimatrixGame& game, std::uint64_t seed) {
  return Endpoint{Endpoint::Side::kRow, game.r(), seed};
}

Endpoint col_endpoint(const BimatrixGame& game, std::uint64_t seed) {
  return Endpoint{Endpoint::Side::kCol, game.c(), seed};
}

std::string Transcript::to_text() const {
  std::string out;
  for (const Message& m : messages)
    out += m.sender + " " + m.tag + " " + std::to_string(m.bits) + "\n";
  out += "total " + std::to_string(total_bits) + "\n";
  return out;
}

int bits_for_index(int v) {
  int b = 0;
  while ((1LL << b) < v) ++b;
  return std::max(1, b);
}

std::uint64_t comm_bit_budget(int n, double eps, const CommConfig& config) {
  const double lg = bits_for_index(std::max(n, 2));
  return static_cast<std::uint64_t>(std::llround(config.budget_k * lg * lg / (eps * eps)));
}

int sample_count(int n, double eps, const CommConfig& config) {
  return static_cast<int>(std::ceil(config.sample_c * std::log(std::max(n, 2)) / (eps * eps)));
}

MixedStrategy SampledStrategy::to_mixed(int n) const {
  std::vector<double> p(n, 0.0);
  for (size_t i = 0; i < support.size(); ++i) p[support[i]] = counts[i] / static_cast<double>(k);
  return MixedStrategy(std::move(p));
}

double max_payoff_deviation(const Matrix& m, const MixedStrategy& x, const MixedStrategy& xs,
                            bool strategy_on_rows) {
  double worst = 0.0;
  if (strategy_on_rows) {
    for (int j = 0; j < m.cols(); ++j) {
      double d = 0.0;
      for (int i = 0; i < m.rows(); ++i) d += (x[i] - xs[i]) * m(i, j);
      worst = std::max(worst, std::abs(d));
    }
  } else {
    for (int i = 0; i < m.rows(); ++i) {
      double d = 0.0;
      for (int j = 0; j < m.cols(); ++j) d += m(i, j) * (x[j] - xs[j]);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

SampledStrategy transmit_sampled(const Endpoint& sender, const MixedStrategy& x,
                                 bool strategy_on_rows, double eps, const CommConfig& config,
                                 Rng& rng, Transcript& transcript, const std::string& tag) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps outside (0,1)");
  const int n = x.size();
  const int k = sample_count(n, eps, config);
  for (int attempt = 0; attempt < config.max_resample; ++attempt) {
    std::vector<int> counts(n, 0);
    for (int s = 0; s < k; ++s) ++counts[rng.sample_index(x.probs())];
    SampledStrategy sampled;
    sampled.k = k;
    for (int i = 0; i < n; ++i)
      if (counts[i] > 0) {
        sampled.support.push_back(i);
        sampled.counts.push_back(counts[i]);
      }
    MixedStrategy xs = sampled.to_mixed(n);
    if (max_payoff_deviation(sender.own, x, xs, strategy_on_rows) <= eps) {
      const std::uint64_t payload =
          sampled.support.size() *
          static_cast<std::uint64_t>(bits_for_index(n) + bits_for_index(k));
      transcript.add(sender.side == Endpoint::Side::kRow ? "row" : "col", tag, payload);
      return sampled;
    }
  }
  throw ResampleLimitExceeded("sampled strategy failed sender-side verification " +
                              std::to_string(config.max_resample) + " times (eps too small?)");
}

SampledStrategy transmit_sampled(const Endpoint& sender, const MixedStrategy& x, double eps,
                                 const CommConfig& config, Rng& rng, Transcript& transcript,
                                 const std::string& tag) {
  return transmit_sampled(sender, x, sender.side == Endpoint::Side::kRow, eps, config, rng,
                          transcript, tag);
}

namespace {

double fixed_point(double v, int bits) {
  const double m = static_cast<double>((1ULL << bits) - 1);
  double clamped = std::min(1.0, std::max(0.0, v));
  return std::llround(clamped * m) / m;
}

// One side's local state. A Party only ever sees its own endpoint; all
// cross-side data is produced by the peer and charged to the transcript.
struct Party {
  const Endpoint* ep;
  int n;
  Rng rng;

  explicit Party(const Endpoint& e)
      : ep(&e), n(e.own.rows()), rng(e.rng_seed) {}

  bool is_row() const { return ep->side == Endpoint::Side::kRow; }
  const char* name() const { return is_row() ? "row" : "col"; }

  // Payoff to self when self plays a and the opponent plays o.
  double pay(int a, int o) const { return is_row() ? ep->own(a, o) : ep->own(o, a); }

  Matrix self_major() const {
    return is_row() ? ep->own : ep->own.transposed();
  }

  double pure_vs(int a, const MixedStrategy& opp) const {
    double acc = 0.0;
    for (int o = 0; o < n; ++o)
      if (opp[o] > 0.0) acc += opp[o] * pay(a, o);
    return acc;
  }

  double expected(const MixedStrategy& self, const MixedStrategy& opp) const {
    double acc = 0.0;
    for (int a = 0; a < n; ++a)
      if (self[a] > 0.0) acc += self[a] * pure_vs(a, opp);
    return acc;
  }

  // Own pure-strategy regret in (self, opp).
  double own_pure_regret(const MixedStrategy& self, const MixedStrategy& opp) const {
    double best = 0.0, worst_supported = 1.0;
    for (int a = 0; a < n; ++a) {
      double v = pure_vs(a, opp);
      best = std::max(best, v);
      if (self[a] > 0.0) worst_supported = std::min(worst_supported, v);
    }
    return std::max(0.0, best - worst_supported);
  }

  int best_response(const MixedStrategy& opp) const {
    int best = 0;
    double best_v = pure_vs(0, opp);
    for (int a = 1; a < n; ++a) {
      double v = pure_vs(a, opp);
      if (v > best_v) {
        best = a;
        best_v = v;
      }
    }
    return best;
  }
};

// Shared protocol state once both locals are solved and values are on the
// wire: the leader is the side with the (weakly) larger declared value.
struct Session {
  Party row;
  Party col;
  Transcript transcript;
  const CommConfig* config;
  double eps;
  bool row_leads = true;

  Session(const Endpoint& r, const Endpoint& c, double e, const CommConfig& cfg)
      : row(r), col(c), config(&cfg), eps(e) {
    if (r.side != Endpoint::Side::kRow || c.side != Endpoint::Side::kCol)
      throw std::invalid_argument("endpoints passed on the wrong sides");
    if (r.own.rows() != r.own.cols() || c.own.rows() != c.own.cols() ||
        r.own.rows() != c.own.rows())
      throw std::invalid_argument("endpoint matrices must be square and of equal size");
    if (!(e > 0.0 && e < 1.0)) throw std::invalid_argument("eps outside (0,1)");
  }

  Party& leader() { return row_leads ? row : col; }
  Party& follower() { return row_leads ? col : row; }

  // Charges a value exchanged as fixed point and returns what both sides see.
  double send_value(const Party& from, const std::string& tag, double v) {
    transcript.add(from.name(), tag, config->value_bits);
    return fixed_point(v, config->value_bits);
  }

  void send_bit(const Party& from, const std::string& tag) {
    transcript.add(from.name(), tag, 1);
  }

  void send_index(const Party& from, const std::string& tag) {
    transcript.add(from.name(), tag, bits_for_index(std::max(row.n, 2)));
  }

  // Payoff list quantized to the wire width; both sides compute on the
  // returned values so their derived state is bit-identical.
  std::vector<double> send_payoffs(const Party& from, const std::string& tag,
                                   std::vector<double> values) {
    transcript.add(from.name(), tag,
                   static_cast<std::uint64_t>(values.size()) * config->value_bits);
    for (double& v : values) v = fixed_point(v, config->value_bits);
    return values;
  }

  Profile make_profile(const MixedStrategy& leader_strat, const MixedStrategy& follower_strat) {
    return row_leads ? Profile{leader_strat, follower_strat}
                     : Profile{follower_strat, leader_strat};
  }

  SolveOutcome outcome(Profile p, SolveStep step, double claimed, bool wsne_claim, double v_l,
                       double v_f) {
    SolveOutcome out{std::move(p), step, claimed, wsne_claim, {}};
    out.notes["v_r"] = row_leads ? v_l : v_f;
    out.notes["v_c"] = row_leads ? v_f : v_l;
    out.notes["eps"] = eps;
    if (!row_leads) out.notes["swapped"] = 1.0;
    return out;
  }
};

MixedStrategy renormalize_on(const MixedStrategy& x, const std::vector<int>& rows) {
  double mass = 0.0;
  for (int i : rows) mass += x[i];
  std::vector<double> v(x.size(), 0.0);
  for (int i : rows) v[i] = x[i] / mass;
  return MixedStrategy(std::move(v));
}

}  // namespace

ProtocolResult protocol_wsne(const Endpoint& row, const Endpoint& col, double eps,
                             const CommConfig& config) {
  Session s(row, col, eps, config);
  const int n = s.row.n;
  const double z = optimal_z();
  const double thr = 2.0 / 3.0 - z + eps;

  ZeroSumSolution row_sol = solve_zero_sum(s.row.self_major());
  ZeroSumSolution col_sol = solve_zero_sum(s.col.self_major());

  // All four sampled strategies go on the wire up front. Each sender
  // verifies the deviation against its own matrix along the strategy's
  // axis, which is what the downstream guarantees rely on.
  SampledStrategy xs_s = transmit_sampled(*s.row.ep, row_sol.x, true, eps, config, s.row.rng,
                                          s.transcript, "x_star_s");
  SampledStrategy ys_s = transmit_sampled(*s.row.ep, row_sol.y, false, eps, config, s.row.rng,
                                          s.transcript, "y_star_s");
  SampledStrategy yh_s = transmit_sampled(*s.col.ep, col_sol.x, false, eps, config, s.col.rng,
                                          s.transcript, "y_hat_s");
  SampledStrategy xh_s = transmit_sampled(*s.col.ep, col_sol.y, true, eps, config, s.col.rng,
                                          s.transcript, "x_hat_s");

  MixedStrategy xs = xs_s.to_mixed(n), ys = ys_s.to_mixed(n);
  MixedStrategy yh = yh_s.to_mixed(n), xh = xh_s.to_mixed(n);

  // Values are the payoffs under the sampled strategies, as each side can
  // evaluate them locally.
  double v_r = s.send_value(s.row, "v_r", s.row.expected(xs, ys));
  double v_c = s.send_value(s.col, "v_c", s.col.expected(yh, xh));
  s.row_leads = v_r >= v_c;
  Party& L = s.leader();
  Party& F = s.follower();
  const double v_l = s.row_leads ? v_r : v_c;
  const double v_f = s.row_leads ? v_c : v_r;
  // Leader-frame aliases: Lu secures v_l, Lw caps the follower's payoffs;
  // Fu/Fw are the follower's counterparts.
  const MixedStrategy& lu = s.row_leads ? xs : yh;
  const MixedStrategy& lw = s.row_leads ? ys : xh;
  const MixedStrategy& fw = s.row_leads ? xh : ys;

  std::map<std::string, double> extra{{"z", z}};
  auto done = [&](Profile p, SolveStep step, double claimed) {
    SolveOutcome out = s.outcome(std::move(p), step, claimed, true, v_l, v_f);
    out.notes.insert(extra.begin(), extra.end());
    return ProtocolResult{std::move(out), std::move(s.transcript)};
  };

  // Step 2.
  if (v_l <= thr + kTol) return done(s.make_profile(fw, lw), SolveStep::kImprovedStep2, thr);

  // Step 3: the follower evaluates its best response against the leader's
  // securing strategy.
  std::vector<double> bp(n);
  for (int j = 0; j < n; ++j) bp[j] = F.pure_vs(j, lu);
  int j_star = static_cast<int>(std::max_element(bp.begin(), bp.end()) - bp.begin());
  if (bp[j_star] <= thr + kTol) {
    s.send_bit(F, "step3_done");
    return done(s.make_profile(lu, lw), SolveStep::kImprovedStep3, thr);
  }
  s.send_bit(F, "step3_continue");
  s.send_index(F, "j_star");
  extra["j_star"] = j_star;

  std::vector<int> supp = lu.support();

  // Step 4: the leader shares its supported payoffs in column j_star; both
  // sides derive the same split from the quantized values.
  std::vector<double> lp_js_supp(supp.size());
  for (size_t i = 0; i < supp.size(); ++i) lp_js_supp[i] = L.pay(supp[i], j_star);
  lp_js_supp = s.send_payoffs(L, "leader_payoffs_jstar", std::move(lp_js_supp));
  std::vector<double> lp_js(n, 0.0);
  for (size_t i = 0; i < supp.size(); ++i) lp_js[supp[i]] = lp_js_supp[i];

  std::vector<int> b_rows, s_rows;
  for (int a : supp) (lp_js[a] < 1.0 / 3.0 + z ? s_rows : b_rows).push_back(a);

  auto fallback = [&](const MixedStrategy* x_b, int js) {
    // The leader shares its side of the candidates' pure regrets; the
    // follower combines them with its own and announces the choice.
    std::vector<Profile> cands = {s.make_profile(fw, lw), s.make_profile(lu, lw)};
    if (x_b) cands.push_back(s.make_profile(*x_b, MixedStrategy::pure(n, js)));
    std::vector<double> l_reg(cands.size()), f_reg(cands.size());
    for (size_t i = 0; i < cands.size(); ++i) {
      const MixedStrategy& lstrat = s.row_leads ? cands[i].row : cands[i].col;
      const MixedStrategy& fstrat = s.row_leads ? cands[i].col : cands[i].row;
      l_reg[i] = L.own_pure_regret(lstrat, fstrat);
      f_reg[i] = F.own_pure_regret(fstrat, lstrat);
    }
    l_reg = s.send_payoffs(L, "fallback_regrets", std::move(l_reg));
    size_t pick = 0;
    double best = 2.0;
    for (size_t i = 0; i < cands.size(); ++i) {
      double score = std::max(l_reg[i], f_reg[i]);
      if (score < best) {
        best = score;
        pick = i;
      }
    }
    s.transcript.add(F.name(), "fallback_pick", 2);
    return done(cands[pick], SolveStep::kImprovedFallback, best);
  };

  if (b_rows.empty()) return fallback(nullptr, j_star);  // sampling noise; see fallback
  MixedStrategy x_b = renormalize_on(lu, b_rows);

  double xb_payoff_jstar = 0.0;
  for (int a : b_rows) xb_payoff_jstar += x_b[a] * F.pay(j_star, a);
  if (xb_payoff_jstar >= 1.0 / 3.0 + z - kTol) {
    s.send_bit(F, "step4_done");
    return done(s.make_profile(x_b, MixedStrategy::pure(n, j_star)),
                SolveStep::kImprovedStep4Shift, thr);
  }
  s.send_bit(F, "step4_continue");

  // Step 5: the follower names its best response against x_B, then the two
  // sides exchange all payoffs in supp(x*_s) x {j_star, j_prime}.
  std::vector<double> bp2(n);
  for (int j = 0; j < n; ++j) bp2[j] = F.pure_vs(j, x_b);
  int j_prime = static_cast<int>(std::max_element(bp2.begin(), bp2.end()) - bp2.begin());
  s.send_index(F, "j_prime");
  extra["j_prime"] = j_prime;

  std::vector<double> lp_jp_supp(supp.size()), fp_js_supp(supp.size()), fp_jp_supp(supp.size());
  for (size_t i = 0; i < supp.size(); ++i) {
    lp_jp_supp[i] = L.pay(supp[i], j_prime);
    fp_js_supp[i] = F.pay(j_star, supp[i]);
    fp_jp_supp[i] = F.pay(j_prime, supp[i]);
  }
  lp_jp_supp = s.send_payoffs(L, "leader_payoffs_jprime", std::move(lp_jp_supp));
  fp_js_supp = s.send_payoffs(F, "follower_payoffs_jstar", std::move(fp_js_supp));
  fp_jp_supp = s.send_payoffs(F, "follower_payoffs_jprime", std::move(fp_jp_supp));
  std::vector<double> lp_jp(n, 0.0), fp_js(n, 0.0), fp_jp(n, 0.0);
  for (size_t i = 0; i < supp.size(); ++i) {
    lp_jp[supp[i]] = lp_jp_supp[i];
    fp_js[supp[i]] = fp_js_supp[i];
    fp_jp[supp[i]] = fp_jp_supp[i];
  }

  // Pure profile scan at level 2/3 - z. The leader's side of the condition
  // needs its full columns; the follower's side needs its full rows. Each
  // evaluates what it can see and the masks are combined.
  const double pure_eps = 2.0 / 3.0 - z;
  double l_best_js = 0.0, l_best_jp = 0.0;
  for (int a = 0; a < n; ++a) {
    l_best_js = std::max(l_best_js, L.pay(a, j_star));
    l_best_jp = std::max(l_best_jp, L.pay(a, j_prime));
  }
  s.transcript.add(L.name(), "pure_mask", 2 * supp.size());
  s.transcript.add(F.name(), "pure_pick", 1 + bits_for_index(2 * static_cast<int>(supp.size())));
  for (int j : {j_star, j_prime}) {
    double l_best = (j == j_star) ? l_best_js : l_best_jp;
    for (int a : supp) {
      bool l_ok = l_best - L.pay(a, j) <= pure_eps + kTol;
      double f_best = 0.0;
      for (int o = 0; o < n; ++o) f_best = std::max(f_best, F.pay(o, a));
      bool f_ok = f_best - F.pay(j, a) <= pure_eps + kTol;
      if (l_ok && f_ok)
        return done(s.make_profile(MixedStrategy::pure(n, a), MixedStrategy::pure(n, j)),
                    SolveStep::kImprovedStep5Pure, thr);
    }
  }

  // Matching pennies on the exchanged payoffs; both sides run the same scan.
  try {
    auto [b, sr] = find_matching_pennies_rows_in(lp_js, lp_jp, fp_js, fp_jp, b_rows, s_rows, z);
    extra["b"] = b;
    extra["s"] = sr;
    Profile mp = mp_profile(n, b, sr, j_star, j_prime, z);
    return done(s.make_profile(mp.row, mp.col), SolveStep::kImprovedStep5MP, mp_quality_bound(z));
  } catch (const NotFoundError&) {
    return fallback(&x_b, j_star);
  }
}

ProtocolResult protocol_ne(const Endpoint& row, const Endpoint& col, double eps,
                           const CommConfig& config) {
  Session s(row, col, eps, config);
  const int n = s.row.n;
  const double thresh = apx_ne_bound();

  ZeroSumSolution row_sol = solve_zero_sum(s.row.self_major());
  ZeroSumSolution col_sol = solve_zero_sum(s.col.self_major());
  double v_r = s.send_value(s.row, "v_r", row_sol.value);
  double v_c = s.send_value(s.col, "v_c", col_sol.value);
  s.row_leads = v_r >= v_c;
  Party& L = s.leader();
  Party& F = s.follower();
  const double v_l = s.row_leads ? v_r : v_c;
  const double v_f = s.row_leads ? v_c : v_r;
  ZeroSumSolution& l_sol = s.row_leads ? row_sol : col_sol;
  ZeroSumSolution& f_sol = s.row_leads ? col_sol : row_sol;

  if (v_l <= thresh + kTol) {
    // Both capping strategies go on the wire; payoffs under the samples are
    // within eps of the originals.
    SampledStrategy fw_s = transmit_sampled(*F.ep, f_sol.y, L.is_row(), eps, config, F.rng,
                                            s.transcript, "x_hat_s");
    SampledStrategy lw_s = transmit_sampled(*L.ep, l_sol.y, F.is_row(), eps, config, L.rng,
                                            s.transcript, "y_star_s");
    return ProtocolResult{s.outcome(s.make_profile(fw_s.to_mixed(n), lw_s.to_mixed(n)),
                                    SolveStep::kApxNeStep1, v_l + eps, false, v_l, v_f),
                          std::move(s.transcript)};
  }

  SampledStrategy lu_s = transmit_sampled(*L.ep, l_sol.x, L.is_row(), eps, config, L.rng,
                                          s.transcript, "x_star_s");
  MixedStrategy lu = lu_s.to_mixed(n);
  int j = F.best_response(lu);
  s.send_index(F, "best_response");
  int r = 0;
  for (int a = 1; a < n; ++a)
    if (L.pay(a, j) > L.pay(r, j)) r = a;

  MixParams mix = mix_params(v_l);
  std::vector<double> xp(n, 0.0);
  for (int a = 0; a < n; ++a) xp[a] = mix.alpha * lu[a];
  xp[r] += mix.beta;
  SolveOutcome out = s.outcome(s.make_profile(MixedStrategy(std::move(xp)), MixedStrategy::pure(n, j)),
                               SolveStep::kApxNeStep2, mix.beta + eps, false, v_l, v_f);
  out.notes["j"] = j;
  out.notes["r"] = r;
  return ProtocolResult{std::move(out), std::move(s.transcript)};
}

ProtocolResult protocol_winlose(const Endpoint& row, const Endpoint& col, double eps,
                                const CommConfig& config) {
  Session s(row, col, eps, config);
  const int n = s.row.n;
  for (const Party* p : {&s.row, &s.col})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double v = p->ep->own(i, j);
        if (v != 0.0 && v != 1.0)
          throw NotWinLoseError("endpoint payoffs must all be exactly 0 or 1");
      }

  ZeroSumSolution row_sol = solve_zero_sum(s.row.self_major());
  ZeroSumSolution col_sol = solve_zero_sum(s.col.self_major());
  double v_r = s.send_value(s.row, "v_r", row_sol.value);
  double v_c = s.send_value(s.col, "v_c", col_sol.value);
  s.row_leads = v_r >= v_c;
  Party& L = s.leader();
  Party& F = s.follower();
  const double v_l = s.row_leads ? v_r : v_c;
  const double v_f = s.row_leads ? v_c : v_r;
  ZeroSumSolution& l_sol = s.row_leads ? row_sol : col_sol;
  ZeroSumSolution& f_sol = s.row_leads ? col_sol : row_sol;

  if (v_l <= 0.5 + kTol) {
    SampledStrategy fw_s = transmit_sampled(*F.ep, f_sol.y, L.is_row(), eps, config, F.rng,
                                            s.transcript, "x_hat_s");
    SampledStrategy lw_s = transmit_sampled(*L.ep, l_sol.y, F.is_row(), eps, config, L.rng,
                                            s.transcript, "y_star_s");
    return ProtocolResult{s.outcome(s.make_profile(fw_s.to_mixed(n), lw_s.to_mixed(n)),
                                    SolveStep::kWinLoseStep2, 0.5 + eps, true, v_l, v_f),
                          std::move(s.transcript)};
  }

  SampledStrategy lu_s = transmit_sampled(*L.ep, l_sol.x, L.is_row(), eps, config, L.rng,
                                          s.transcript, "x_star_s");
  MixedStrategy lu = lu_s.to_mixed(n);
  int j_star = F.best_response(lu);
  if (F.pure_vs(j_star, lu) <= 0.5 + eps + kTol) {
    s.send_bit(F, "step3_done");
    return ProtocolResult{s.outcome(s.make_profile(lu, MixedStrategy::pure(n, j_star)),
                                    SolveStep::kWinLoseStep3, 0.5 + eps, true, v_l, v_f),
                          std::move(s.transcript)};
  }
  s.send_bit(F, "step3_continue");
  s.send_index(F, "j_star");

  // Win-lose payoffs fit in one bit each.
  std::vector<int> supp = lu.support();
  s.transcript.add(L.name(), "leader_payoffs_jstar", supp.size());
  int pure_row = -1;
  for (int a : supp)
    if (L.pay(a, j_star) == 1.0 && F.pay(j_star, a) == 1.0) {
      pure_row = a;
      break;
    }
  s.transcript.add(F.name(), "pure_pick", 1 + bits_for_index(std::max(n, 2)));
  if (pure_row >= 0)
    return ProtocolResult{
        s.outcome(s.make_profile(MixedStrategy::pure(n, pure_row), MixedStrategy::pure(n, j_star)),
                  SolveStep::kWinLoseStep4, 0.0, true, v_l, v_f),
        std::move(s.transcript)};

  // Sampling noise starved the pure-pair argument; the best-response pair
  // is still the right fallback output.
  return ProtocolResult{s.outcome(s.make_profile(lu, MixedStrategy::pure(n, j_star)),
                                  SolveStep::kWinLoseStep3, 0.5 + eps, true, v_l, v_f),
                        std::move(s.transcript)};
}

}  // namespace bimatrix
