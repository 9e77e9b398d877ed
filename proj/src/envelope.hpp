#pragma once

#include <vector>

#include "lex_layout.hpp"
#include "sfc_layout.hpp"
#include "stencil.hpp"

namespace meshdist {

enum class RegionRole { SendFrom, ReceiveInto };

/// A box of grid points tied to one subgrid: read from the sender's
/// interior (SendFrom) or written into the receiver's ghost strip
/// (ReceiveInto).  Coordinates are global, so a message's paired regions
/// cover the same point set.
struct RegionBox {
  Box box;
  Index gid = 0;  // subgrid id in the layout's global order
  Triple pvec{0, 0, 0};
  RegionRole role = RegionRole::SendFrom;

  bool operator==(const RegionBox&) const = default;
};

struct Message {
  int src = 0;
  int dst = 0;
  RegionBox from;  // role SendFrom, subgrid owned by src
  RegionBox into;  // role ReceiveInto, subgrid owned by dst
  Index points = 0;

  bool operator==(const Message&) const = default;
};

/// The halo-exchange schedule one rank derives from its own metadata only:
/// what it sends, what it expects to receive, and the ghost fills between
/// its own subgrids when it owns more than one.
struct RankSchedule {
  int rank = 0;
  std::vector<Message> sends;
  std::vector<Message> recvs;
  std::vector<Message> local_copies;  // src == dst == rank
};

RankSchedule derive_schedule(LexLayout& layout, const Stencil& stencil);
RankSchedule derive_schedule(SfcLayout& layout, const Stencil& stencil);

/// The complete message schedule for one stencil: every cross-rank message
/// once, in a canonical order (src, dst, sender subgrid, region), plus the
/// same-rank copies.  Sender-side and receiver-side derivations are
/// cross-checked during assembly.
struct Envelope {
  Stencil stencil;
  Index ranks = 0;
  std::vector<Message> messages;
  std::vector<Message> local_copies;
  std::vector<std::vector<size_t>> send_index;  // per rank, into messages
  std::vector<std::vector<size_t>> recv_index;

  Index total_points() const;
};

Envelope build_envelope(std::vector<LexLayout>& layouts, const Stencil& stencil);
Envelope build_envelope(std::vector<SfcLayout>& layouts, const Stencil& stencil);

/// Canonical JSON rendering (documented field order, byte-stable across
/// runs).  rank_filter < 0 keeps every message; otherwise only messages
/// sent or received by that rank.
std::string envelope_to_json(const Envelope& envelope, Index rank_filter = -1);

}  // namespace meshdist
