/*
 * Copyright 2026 The relayopt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "relayopt/cgras.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace relayopt {

int set_size(SmallSet s) {
    int n = 0;
    while (s) {
        n += s & 1u;
        s = static_cast<SmallSet>(s >> 1);
    }
    return n;
}

std::string set_digits(SmallSet s) {
    std::string out;
    for (int i = 1; i <= 3; ++i) {
        if (set_contains(s, i)) out += static_cast<char>('0' + i);
    }
    return out;
}

std::vector<std::pair<int, double>> Cgras::split_of(int message) const {
    std::vector<std::pair<int, double>> out;
    for (int u = 0; u < num_codewords(); ++u) {
        if (codewords[static_cast<std::size_t>(u)].message == message) {
            out.emplace_back(u, codewords[static_cast<std::size_t>(u)].share);
        }
    }
    return out;
}

bool Cgras::has_split() const {
    for (int z = 1; z <= 3; ++z) {
        if (split_of(z).size() > 1) return true;
    }
    return false;
}

std::string to_string(CooperationLevel level) {
    switch (level) {
        case CooperationLevel::kNone: return "none";
        case CooperationLevel::kPartial1: return "partial-1";
        case CooperationLevel::kPartial2: return "partial-2";
        case CooperationLevel::kFull: return "full";
    }
    return "?";
}

CooperationLevel cooperation_level(const Cgras& c) {
    const int shared = set_size(static_cast<SmallSet>(c.alloc.relay1 & c.alloc.relay2));
    switch (shared) {
        case 0: return CooperationLevel::kNone;
        case 1: return CooperationLevel::kPartial1;
        case 2: return CooperationLevel::kPartial2;
        default: return CooperationLevel::kFull;
    }
}

namespace {

std::string share_str(double share) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", share);
    return buf;
}

bool has_cycle(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [base, top] : edges) {
        adj[static_cast<std::size_t>(base)].push_back(top);
        ++indeg[static_cast<std::size_t>(top)];
    }
    std::vector<int> queue;
    for (int u = 0; u < n; ++u) {
        if (indeg[static_cast<std::size_t>(u)] == 0) queue.push_back(u);
    }
    int seen = 0;
    while (!queue.empty()) {
        const int u = queue.back();
        queue.pop_back();
        ++seen;
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (--indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
        }
    }
    return seen != n;
}

}  // namespace

std::vector<Violation> validate(const Cgras& c) {
    std::vector<Violation> out;
    const int n = c.num_codewords();

    if (!c.alloc.covers_all_messages()) {
        out.push_back({"allocation-coverage",
                       "W1^RN u W2^RN = {" + set_digits(static_cast<SmallSet>(c.alloc.relay1 | c.alloc.relay2)) +
                           "} misses a message"});
    }

    for (int u = 0; u < n; ++u) {
        const Codeword& cw = c.codewords[static_cast<std::size_t>(u)];
        const std::string id = "codeword " + std::to_string(u);
        if (cw.message < 1 || cw.message > 3) {
            out.push_back({"bad-message", id});
            continue;
        }
        if (cw.tx == 0) out.push_back({"tx-empty", id});
        if (cw.rx == 0) out.push_back({"rx-empty", id});
        if (!set_subset(cw.tx, c.alloc.knowing_relays(cw.message))) {
            out.push_back({"tx-not-subset-of-knowing-relays",
                           id + ": tx={" + set_digits(cw.tx) + "} but W" + std::to_string(cw.message) +
                               " is known at {" + set_digits(c.alloc.knowing_relays(cw.message)) + "}"});
        }
        if (!(cw.share > 0.0) || cw.share > 1.0 + 1e-12) {
            out.push_back({"share-range", id});
        }
    }

    for (int z = 1; z <= 3; ++z) {
        const auto parts = c.split_of(z);
        if (parts.empty()) {
            out.push_back({"message-missing", "no codeword carries W" + std::to_string(z)});
            continue;
        }
        SmallSet rx_union = 0;
        double share_sum = 0.0;
        for (const auto& [u, share] : parts) {
            rx_union |= c.codewords[static_cast<std::size_t>(u)].rx;
            share_sum += share;
        }
        if (!set_contains(rx_union, z)) {
            out.push_back({"intended-receiver-missing",
                           "no codeword of W" + std::to_string(z) + " is decoded at RX" + std::to_string(z)});
        }
        if (std::fabs(share_sum - 1.0) > 1e-9) {
            out.push_back({"share-sum", "shares of W" + std::to_string(z) + " sum to " + share_str(share_sum)});
        }
    }

    for (const auto& [base, top] : c.edges) {
        if (base < 0 || base >= n || top < 0 || top >= n || base == top) {
            out.push_back({"edge-bad-index", std::to_string(base) + "<" + std::to_string(top)});
            continue;
        }
        const Codeword& b = c.codewords[static_cast<std::size_t>(base)];
        const Codeword& t = c.codewords[static_cast<std::size_t>(top)];
        const std::string id = std::to_string(base) + "<" + std::to_string(top);
        if (!set_subset(t.tx, b.tx)) {
            out.push_back({"edge-tx-not-subset", id});
        }
        if (!set_subset(t.rx, b.rx)) {
            out.push_back({"decode-closure", id + ": rx(top)={" + set_digits(t.rx) +
                                                 "} not within rx(base)={" + set_digits(b.rx) + "}"});
        }
    }

    if (has_cycle(n, c.edges)) {
        out.push_back({"superposition-cycle", "edge relation is cyclic"});
    }

    return out;
}

std::vector<MessageAllocation> enumerate_allocations() {
    static const SmallSet kChoices[3] = {set_of(1), set_of(2), set_of(1, 2)};
    std::vector<MessageAllocation> out;
    out.reserve(27);
    for (SmallSet k1 : kChoices) {
        for (SmallSet k2 : kChoices) {
            for (SmallSet k3 : kChoices) {
                MessageAllocation alloc;
                const SmallSet per_msg[3] = {k1, k2, k3};
                for (int z = 1; z <= 3; ++z) {
                    if (set_contains(per_msg[z - 1], 1)) alloc.relay1 |= set_of(z);
                    if (set_contains(per_msg[z - 1], 2)) alloc.relay2 |= set_of(z);
                }
                out.push_back(alloc);
            }
        }
    }
    return out;
}

namespace {

// Codeword bundle for one message together with edges forced inside the
// bundle (common part as base of the private part).
struct MsgOption {
    std::vector<Codeword> parts;
    std::vector<std::pair<int, int>> forced;  // local indices
};

std::vector<SmallSet> nonempty_subsets(SmallSet s) {
    std::vector<SmallSet> out;
    for (SmallSet m = 1; m <= s; ++m) {
        if (set_subset(m, s)) out.push_back(m);
    }
    return out;
}

std::vector<SmallSet> rx_choices(int z) {
    std::vector<SmallSet> out;
    for (SmallSet m = 0; m < 8; ++m) {
        if (set_contains(m, z)) out.push_back(m);
    }
    return out;
}

std::vector<MsgOption> message_options(int z, SmallSet knowing, const EnumOptions& opts) {
    std::vector<MsgOption> out;
    const std::vector<SmallSet> txs =
        opts.tx_full_knowing_set ? std::vector<SmallSet>{knowing} : nonempty_subsets(knowing);
    const std::vector<SmallSet> rxs = rx_choices(z);
    for (SmallSet tx : txs) {
        for (SmallSet rx : rxs) {
            out.push_back({{Codeword{z, tx, rx, 1.0}}, {}});
        }
    }
    if (opts.allow_splitting && opts.max_splits >= 2) {
        // Private/common pair: the private part is decoded by the intended
        // receiver only and rides on top of the common part.
        const SmallSet rx_private = set_of(z);
        for (SmallSet rx_common : rxs) {
            if (rx_common == rx_private) continue;
            for (SmallSet tx_c : txs) {
                for (SmallSet tx_p : txs) {
                    if (!set_subset(tx_p, tx_c)) continue;
                    MsgOption opt;
                    opt.parts.push_back(Codeword{z, tx_c, rx_common, 0.5});
                    opt.parts.push_back(Codeword{z, tx_p, rx_private, 0.5});
                    opt.forced.emplace_back(0, 1);
                    out.push_back(std::move(opt));
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Cgras> enumerate_schemes(const MessageAllocation& alloc, const EnumOptions& opts) {
    if (!alloc.covers_all_messages()) {
        throw std::invalid_argument("enumerate_schemes: allocation does not cover all messages");
    }
    if (opts.max_splits > 2) {
        throw std::invalid_argument("enumerate_schemes: max_splits > 2 is not supported");
    }
    std::vector<std::vector<MsgOption>> per_msg;
    for (int z = 1; z <= 3; ++z) {
        EnumOptions msg_opts = opts;
        msg_opts.allow_splitting = opts.allow_splitting && opts.max_splits >= 2;
        per_msg.push_back(message_options(z, alloc.knowing_relays(z), msg_opts));
    }

    std::vector<Cgras> out;
    for (const MsgOption& o1 : per_msg[0]) {
        for (const MsgOption& o2 : per_msg[1]) {
            for (const MsgOption& o3 : per_msg[2]) {
                int splits = 0;
                for (const MsgOption* o : {&o1, &o2, &o3}) {
                    if (o->parts.size() > 1) ++splits;
                }
                if (splits > opts.max_split_messages) continue;

                std::vector<Codeword> cws;
                std::vector<std::pair<int, int>> forced;
                for (const MsgOption* o : {&o1, &o2, &o3}) {
                    const int off = static_cast<int>(cws.size());
                    cws.insert(cws.end(), o->parts.begin(), o->parts.end());
                    for (auto [b, t] : o->forced) forced.emplace_back(off + b, off + t);
                }
                const int n = static_cast<int>(cws.size());

                // Candidate edges: tx(top) within tx(base), rx(top) within rx(base).
                std::vector<std::pair<int, int>> allowed;
                for (int u = 0; u < n; ++u) {
                    for (int v = 0; v < n; ++v) {
                        if (u == v) continue;
                        if (set_subset(cws[static_cast<std::size_t>(v)].tx, cws[static_cast<std::size_t>(u)].tx) &&
                            set_subset(cws[static_cast<std::size_t>(v)].rx, cws[static_cast<std::size_t>(u)].rx)) {
                            allowed.emplace_back(u, v);
                        }
                    }
                }
                const int m = static_cast<int>(allowed.size());
                if (m > 18) {
                    throw std::invalid_argument(
                        "enumerate_schemes: superposition relation too large; lower max_splits "
                        "or max_split_messages");
                }
                std::uint32_t forced_mask = 0;
                {
                    bool forced_ok = true;
                    for (auto f : forced) {
                        const auto it = std::find(allowed.begin(), allowed.end(), f);
                        if (it == allowed.end()) {
                            forced_ok = false;
                            break;
                        }
                        forced_mask |= 1u << (it - allowed.begin());
                    }
                    if (!forced_ok) continue;
                }

                // All strict partial orders (transitively closed, antisymmetric
                // relations) over the allowed pairs that contain the forced edges.
                for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
                    if ((bits & forced_mask) != forced_mask) continue;
                    bool rel[6][6] = {};
                    bool ok = true;
                    for (int i = 0; i < m && ok; ++i) {
                        if (!(bits >> i & 1u)) continue;
                        const auto [u, v] = allowed[static_cast<std::size_t>(i)];
                        rel[u][v] = true;
                        if (rel[v][u]) ok = false;
                    }
                    if (!ok) continue;
                    for (int u = 0; u < n && ok; ++u) {
                        for (int v = 0; v < n && ok; ++v) {
                            if (!rel[u][v]) continue;
                            for (int w = 0; w < n; ++w) {
                                if (rel[v][w] && !rel[u][w]) {
                                    ok = false;
                                    break;
                                }
                            }
                        }
                    }
                    if (!ok) continue;

                    Cgras c;
                    c.alloc = alloc;
                    c.codewords = cws;
                    for (int i = 0; i < m; ++i) {
                        if (bits >> i & 1u) c.edges.push_back(allowed[static_cast<std::size_t>(i)]);
                    }
                    out.push_back(std::move(c));
                }
            }
        }
    }
    return out;
}

std::vector<Cgras> enumerate_all_schemes(const EnumOptions& opts, bool dedup_symmetry) {
    std::vector<Cgras> out;
    std::unordered_set<std::string> seen;
    for (const MessageAllocation& alloc : enumerate_allocations()) {
        for (Cgras& c : enumerate_schemes(alloc, opts)) {
            if (dedup_symmetry) {
                if (!seen.insert(canonicalize(c)).second) continue;
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

struct CwKey {
    int message;
    SmallSet tx;
    SmallSet rx;
    double share;
    bool operator<(const CwKey& o) const {
        if (message != o.message) return message < o.message;
        if (tx != o.tx) return tx < o.tx;
        if (rx != o.rx) return rx < o.rx;
        return share < o.share;
    }
};

std::string serialize_sorted(const Cgras& c) {
    const int n = c.num_codewords();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        const Codeword& a = c.codewords[static_cast<std::size_t>(x)];
        const Codeword& b = c.codewords[static_cast<std::size_t>(y)];
        return CwKey{a.message, a.tx, a.rx, a.share} < CwKey{b.message, b.tx, b.rx, b.share};
    });
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    std::string s = "W[" + set_digits(c.alloc.relay1) + "|" + set_digits(c.alloc.relay2) + "]";
    for (int i = 0; i < n; ++i) {
        const Codeword& cw = c.codewords[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        s += " U{" + set_digits(cw.tx) + "→" + set_digits(cw.rx) + "}(W" + std::to_string(cw.message) +
             ":" + share_str(cw.share) + ")";
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [b, t] : c.edges) {
        edges.emplace_back(pos[static_cast<std::size_t>(b)], pos[static_cast<std::size_t>(t)]);
    }
    std::sort(edges.begin(), edges.end());
    s += " E[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(edges[i].first) + "<" + std::to_string(edges[i].second);
    }
    s += "]";
    return s;
}

}  // namespace

std::string serialize(const Cgras& c) { return serialize_sorted(c); }

namespace {

SmallSet mirror_relays(SmallSet tx) {
    SmallSet out = 0;
    if (set_contains(tx, 1)) out |= set_of(2);
    if (set_contains(tx, 2)) out |= set_of(1);
    return out;
}

SmallSet mirror_receivers(SmallSet rx) {
    SmallSet out = 0;
    if (set_contains(rx, 1)) out |= set_of(3);
    if (set_contains(rx, 2)) out |= set_of(2);
    if (set_contains(rx, 3)) out |= set_of(1);
    return out;
}

}  // namespace

Cgras mirror_scheme(const Cgras& c) {
    Cgras m;
    m.alloc.relay1 = mirror_receivers(c.alloc.relay2);
    m.alloc.relay2 = mirror_receivers(c.alloc.relay1);
    m.codewords.reserve(c.codewords.size());
    for (const Codeword& cw : c.codewords) {
        m.codewords.push_back(Codeword{4 - cw.message, mirror_relays(cw.tx), mirror_receivers(cw.rx), cw.share});
    }
    m.edges = c.edges;
    return m;
}

std::string canonicalize(const Cgras& c) {
    std::string a = serialize_sorted(c);
    std::string b = serialize_sorted(mirror_scheme(c));
    return a < b ? a : b;
}

}  // namespace relayopt
