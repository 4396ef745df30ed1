#include "insdel/channel.hpp"

#include <algorithm>

#include "json.hpp"

namespace insdel {

Word apply_script(const Word& w, const EditScript& script) {
    std::vector<Symbol> s(w.symbols().begin(), w.symbols().end());
    for (std::size_t k = 0; k < script.size(); ++k) {
        const EditOp& op = script[k];
        if (op.kind == EditOp::Kind::erase) {
            if (op.pos >= s.size()) {
                throw Error(ErrorKind::script, "operation " + std::to_string(k) + " deletes position " +
                                                   std::to_string(op.pos) + " of a length-" + std::to_string(s.size()) + " word");
            }
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(op.pos));
        } else {
            if (op.pos > s.size()) {
                throw Error(ErrorKind::script, "operation " + std::to_string(k) + " inserts before position " +
                                                   std::to_string(op.pos) + " of a length-" + std::to_string(s.size()) + " word");
            }
            if (!w.alphabet().contains(op.symbol)) throw Error(ErrorKind::script, "inserted symbol outside the alphabet");
            s.insert(s.begin() + static_cast<std::ptrdiff_t>(op.pos), op.symbol);
        }
    }
    return Word(w.alphabet(), std::move(s));
}

namespace {

EditScript random_script(std::size_t len, std::uint32_t q, std::size_t n_ins, std::size_t n_del, CounterRng& rng) {
    EditScript script;
    script.reserve(n_ins + n_del);
    for (std::size_t k = 0; k < n_del; ++k) {
        script.push_back({EditOp::Kind::erase, static_cast<std::size_t>(rng.uniform(len)), 0});
        --len;
    }
    for (std::size_t k = 0; k < n_ins; ++k) {
        auto pos = static_cast<std::size_t>(rng.uniform(len + 1));
        auto sym = static_cast<Symbol>(rng.uniform(q));
        script.push_back({EditOp::Kind::insert, pos, sym});
        ++len;
    }
    return script;
}

}  // namespace

ChannelOutput random_channel(const Word& w, std::size_t n_ins, std::size_t n_del, Seed seed) {
    if (n_del > w.size()) {
        throw Error(ErrorKind::budget, "cannot delete " + std::to_string(n_del) + " symbols from a length-" +
                                           std::to_string(w.size()) + " word");
    }
    CounterRng rng(seed);
    EditScript script = random_script(w.size(), w.q(), n_ins, n_del, rng);
    return ChannelOutput{apply_script(w, script), std::move(script)};
}

BlockChannelOutput adversarial_block_channel(const Word& c, std::size_t block_len,
                                             const std::vector<std::size_t>& budgets, Seed seed) {
    if (block_len == 0 || c.size() % block_len != 0) throw Error(ErrorKind::budget, "word length is not a multiple of the block length");
    const std::size_t blocks = c.size() / block_len;
    if (budgets.size() != blocks) {
        throw Error(ErrorKind::budget, "got " + std::to_string(budgets.size()) + " budgets for " + std::to_string(blocks) + " blocks");
    }
    BlockChannelOutput out{Word(c.alphabet()), {}, {}, budgets};
    std::vector<Symbol> received;
    for (std::size_t i = 0; i < blocks; ++i) {
        const std::size_t b = budgets[i];
        if (b > 2 * block_len) throw Error(ErrorKind::budget, "block budget exceeds twice the block length");
        CounterRng rng(CounterRng::derive(seed, i));
        const std::size_t del_lo = b > block_len ? b - block_len : 0;
        const std::size_t del_hi = std::min(b, block_len);
        const std::size_t n_del = del_lo + static_cast<std::size_t>(rng.uniform(del_hi - del_lo + 1));
        EditScript local = random_script(block_len, c.q(), b - n_del, n_del, rng);
        Word block = apply_script(c.subword(i * block_len, block_len), local);
        const std::size_t offset = received.size();
        for (EditOp op : local) {
            op.pos += offset;
            out.script.push_back(op);
        }
        out.segments.push_back({offset, block.size()});
        received.insert(received.end(), block.symbols().begin(), block.symbols().end());
    }
    out.word = Word(c.alphabet(), std::move(received));
    return out;
}

std::vector<std::size_t> random_budget_split(std::size_t total, std::size_t blocks, std::size_t cap, Seed seed) {
    if (total > blocks * cap) throw Error(ErrorKind::budget, "budget does not fit under the per-block cap");
    std::vector<std::size_t> budgets(blocks, 0);
    CounterRng rng(seed);
    for (std::size_t k = 0; k < total; ++k) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < blocks; ++i) {
            if (budgets[i] < cap) open.push_back(i);
        }
        ++budgets[open[rng.uniform(open.size())]];
    }
    return budgets;
}

std::string script_to_json(const EditScript& script) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const EditOp& op : script) {
        nlohmann::ordered_json j;
        j["op"] = op.kind == EditOp::Kind::erase ? "delete" : "insert";
        j["pos"] = op.pos;
        if (op.kind == EditOp::Kind::insert) j["symbol"] = op.symbol;
        arr.push_back(j);
    }
    return arr.dump();
}

EditScript script_from_json(const std::string& text) {
    EditScript script;
    try {
        for (const auto& j : nlohmann::json::parse(text)) {
            EditOp op;
            const auto kind = j.at("op").get<std::string>();
            if (kind == "delete") {
                op.kind = EditOp::Kind::erase;
            } else if (kind == "insert") {
                op.kind = EditOp::Kind::insert;
                op.symbol = j.at("symbol").get<Symbol>();
            } else {
                throw Error(ErrorKind::parse, "unknown edit operation '" + kind + "'");
            }
            op.pos = j.at("pos").get<std::size_t>();
            script.push_back(op);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse, std::string("bad script JSON: ") + e.what());
    }
    return script;
}

}  // namespace insdel
