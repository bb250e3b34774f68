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

#ifndef RELAYOPT_CGRAS_HPP
#define RELAYOPT_CGRAS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace relayopt {

/// Small index sets (relays 1..2, receivers/messages 1..3) as bitmasks:
/// bit i-1 stands for index i.
using SmallSet = std::uint8_t;

constexpr SmallSet set_of() { return 0; }
constexpr SmallSet set_of(int a) { return static_cast<SmallSet>(1u << (a - 1)); }
constexpr SmallSet set_of(int a, int b) { return static_cast<SmallSet>(set_of(a) | set_of(b)); }
constexpr SmallSet set_of(int a, int b, int c) {
    return static_cast<SmallSet>(set_of(a, b) | set_of(c));
}
constexpr bool set_contains(SmallSet s, int i) { return (s >> (i - 1)) & 1u; }
constexpr bool set_subset(SmallSet inner, SmallSet outer) { return (inner & ~outer) == 0; }
int set_size(SmallSet s);
std::string set_digits(SmallSet s);

inline constexpr SmallSet kAllMessages = set_of(1, 2, 3);
inline constexpr SmallSet kAllRelays = set_of(1, 2);

/// Which messages the base station replicates to each relay.
struct MessageAllocation {
    SmallSet relay1 = 0;  ///< messages decoded at relay 1
    SmallSet relay2 = 0;  ///< messages decoded at relay 2

    SmallSet knowing_relays(int message) const {
        SmallSet s = 0;
        if (set_contains(relay1, message)) s |= set_of(1);
        if (set_contains(relay2, message)) s |= set_of(2);
        return s;
    }
    SmallSet messages_at(int relay) const { return relay == 1 ? relay1 : relay2; }
    bool covers_all_messages() const { return (relay1 | relay2) == kAllMessages; }
    bool operator==(const MessageAllocation&) const = default;
};

/// One codeword of a coded scheme: transmitted by the relays in `tx`,
/// decoded by the receivers in `rx`, carrying `share` of message
/// `message`'s rate.
struct Codeword {
    int message = 0;    ///< 1..3
    SmallSet tx = 0;    ///< nonempty subset of relays
    SmallSet rx = 0;    ///< nonempty subset of receivers
    double share = 1.0; ///< fraction of R_message carried, in (0,1]
};

/// A coded transmission scheme: message allocation, codewords, and the
/// superposition relation (edges run base -> top; decoding a top requires
/// decoding its bases). Enumerated schemes store the transitive closure.
struct Cgras {
    MessageAllocation alloc;
    std::vector<Codeword> codewords;
    std::vector<std::pair<int, int>> edges;  ///< (base index, top index)

    int num_codewords() const { return static_cast<int>(codewords.size()); }
    /// Split map: (codeword index, share) per message.
    std::vector<std::pair<int, double>> split_of(int message) const;
    bool has_split() const;
};

enum class CooperationLevel { kNone, kPartial1, kPartial2, kFull };

std::string to_string(CooperationLevel level);

/// |W1 cap W2| = 0 / 1 / 2 / 3.
CooperationLevel cooperation_level(const Cgras& c);

struct Violation {
    std::string rule;
    std::string detail;
};

/// Structural validation. Violations come back as data; an empty list
/// means the scheme is well formed.
std::vector<Violation> validate(const Cgras& c);

/// All 27 covering allocations (each message at relay 1, relay 2, or both).
std::vector<MessageAllocation> enumerate_allocations();

struct EnumOptions {
    bool allow_splitting = false;
    /// Max codewords per message. Only 1 (no split) and 2 (private/common
    /// pair) are supported.
    int max_splits = 2;
    /// How many messages may be split within one scheme.
    int max_split_messages = 1;
    /// When false, a codeword's tx set ranges over every nonempty subset of
    /// the knowing relays instead of being pinned to the full set. Subset-tx
    /// schemes are always dominated by the same scheme under a reduced
    /// allocation, so the pinned default loses no optima.
    bool tx_full_knowing_set = true;
};

/// Every valid scheme for one allocation, in deterministic order.
std::vector<Cgras> enumerate_schemes(const MessageAllocation& alloc,
                                     const EnumOptions& opts = {});

/// Schemes over all allocations. With `dedup_symmetry` (the symmetric
/// (a,b) channel case) one representative per canonical key is kept.
std::vector<Cgras> enumerate_all_schemes(const EnumOptions& opts = {},
                                         bool dedup_symmetry = true);

/// Stable text form: allocation, codewords as U{tx->rx}(Wz:share), edges
/// as base<top over sorted codeword positions.
std::string serialize(const Cgras& c);

/// Relay 1 <-> relay 2 plus receiver/message 1 <-> 3. Preserves the rate
/// region of any symmetric-channel scheme.
Cgras mirror_scheme(const Cgras& c);

/// Canonical key: lexicographic min of serialize over the symmetry orbit.
std::string canonicalize(const Cgras& c);

}  // namespace relayopt

#endif
