#include "lcsx/gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcsx {

const char* kind_name(instance_kind k) {
    switch (k) {
        case instance_kind::uniform: return "uniform";
        case instance_kind::planted: return "planted";
        case instance_kind::adversarial_decreasing: return "adversarial_decreasing";
        case instance_kind::block_repeat: return "block_repeat";
    }
    return "?";
}

instance_kind kind_from_name(const std::string& name) {
    if (name == "uniform") return instance_kind::uniform;
    if (name == "planted") return instance_kind::planted;
    if (name == "adversarial_decreasing") return instance_kind::adversarial_decreasing;
    if (name == "block_repeat") return instance_kind::block_repeat;
    throw std::invalid_argument("unknown instance kind: " + name);
}

namespace {

std::vector<std::uint32_t> uniform_side(splitmix64& rng, std::size_t n, std::size_t alphabet) {
    std::vector<std::uint32_t> out(n);
    for (auto& v : out) v = static_cast<std::uint32_t>(rng.next_below(alphabet));
    return out;
}

// Sorted k-subset of [0..n) by selection sampling (Knuth 3.4.2, Algorithm S).
std::vector<std::size_t> sorted_positions(splitmix64& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> out;
    out.reserve(k);
    std::size_t need = k;
    for (std::size_t i = 0; i < n && need > 0; ++i) {
        if (rng.next_below(n - i) < need) {
            out.push_back(i);
            --need;
        }
    }
    return out;
}

std::vector<std::uint32_t> planted_side(splitmix64& rng, std::size_t n, std::size_t alphabet,
                                        const std::vector<std::uint32_t>& common) {
    std::vector<std::uint32_t> out = uniform_side(rng, n, alphabet);
    std::vector<std::size_t> where = sorted_positions(rng, n, common.size());
    for (std::size_t k = 0; k < where.size(); ++k) out[where[k]] = common[k];
    return out;
}

std::vector<std::uint32_t> block_side(splitmix64& rng, std::size_t n, std::size_t alphabet) {
    std::vector<std::uint32_t> out;
    out.reserve(n);
    const std::size_t run_max = std::max<std::size_t>(1, n / std::max<std::size_t>(1, alphabet));
    while (out.size() < n) {
        auto sym = static_cast<std::uint32_t>(rng.next_below(alphabet));
        // Adjacent runs must differ, or two draws would fuse past run_max.
        if (!out.empty() && sym == out.back() && alphabet > 1)
            sym = static_cast<std::uint32_t>((sym + 1 + rng.next_below(alphabet - 1)) % alphabet);
        std::size_t run = 1 + rng.next_below(run_max);
        run = std::min(run, n - out.size());
        out.insert(out.end(), run, sym);
    }
    return out;
}

}  // namespace

instance generate(const instance_spec& spec) {
    if (spec.alphabet == 0 && spec.kind != instance_kind::adversarial_decreasing)
        throw std::invalid_argument("generate: alphabet must be positive");
    splitmix64 rng(spec.seed);
    instance inst;
    switch (spec.kind) {
        case instance_kind::uniform:
            inst.x = uniform_side(rng, spec.n_x, spec.alphabet);
            inst.y = uniform_side(rng, spec.n_y, spec.alphabet);
            if (spec.alphabet == 1) inst.lcs_lower_bound = std::min(spec.n_x, spec.n_y);
            break;
        case instance_kind::planted: {
            if (spec.planted_len > std::min(spec.n_x, spec.n_y))
                throw std::invalid_argument("generate: planted_len exceeds a side length");
            std::vector<std::uint32_t> common = uniform_side(rng, spec.planted_len, spec.alphabet);
            inst.x = planted_side(rng, spec.n_x, spec.alphabet, common);
            inst.y = planted_side(rng, spec.n_y, spec.alphabet, common);
            inst.lcs_lower_bound = spec.planted_len;
            break;
        }
        case instance_kind::adversarial_decreasing:
            inst.x.resize(spec.n_x);
            for (std::size_t i = 0; i < spec.n_x; ++i) inst.x[i] = static_cast<std::uint32_t>(i);
            inst.y.assign(inst.x.rbegin(), inst.x.rend());
            inst.lcs_lower_bound = spec.n_x > 0 ? 1 : 0;
            break;
        case instance_kind::block_repeat:
            inst.x = block_side(rng, spec.n_x, spec.alphabet);
            inst.y = block_side(rng, spec.n_y, spec.alphabet);
            break;
    }
    return inst;
}

}  // namespace lcsx
