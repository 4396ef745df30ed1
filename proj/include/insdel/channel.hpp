#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "insdel/core.hpp"
#include "insdel/rng.hpp"

namespace insdel {

/// One edit. Positions refer to the word as it is when the edit is applied:
/// `erase` removes the symbol at pos, `insert` puts symbol before pos (pos may equal the length).
struct EditOp {
    enum class Kind { erase, insert };
    Kind kind = Kind::erase;
    std::size_t pos = 0;
    Symbol symbol = 0;

    friend bool operator==(const EditOp&, const EditOp&) = default;
};

using EditScript = std::vector<EditOp>;

Word apply_script(const Word& w, const EditScript& script);

struct ChannelOutput {
    Word word;
    EditScript script;
};

/// n_del uniform random deletions followed by n_ins uniform random insertions.
ChannelOutput random_channel(const Word& w, std::size_t n_ins, std::size_t n_del, Seed seed);

/// Where each block of the sent word ended up in the received word.
struct BlockSegment {
    std::size_t start = 0;
    std::size_t length = 0;
};

struct BlockChannelOutput {
    Word word;
    EditScript script;                  // in the coordinates of the full word
    std::vector<BlockSegment> segments;
    std::vector<std::size_t> block_budgets;
};

/// Applies exactly budgets[i] edits inside block i (a random split into deletions
/// and insertions), each block driven by its own sub-seed.
BlockChannelOutput adversarial_block_channel(const Word& c, std::size_t block_len,
                                             const std::vector<std::size_t>& budgets, Seed seed);

/// Splits a total budget over `blocks` blocks at random, each block capped at `cap`.
std::vector<std::size_t> random_budget_split(std::size_t total, std::size_t blocks, std::size_t cap, Seed seed);

std::string script_to_json(const EditScript& script);
EditScript script_from_json(const std::string& text);

}  // namespace insdel
