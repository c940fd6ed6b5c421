#ifndef LCSX_GEN_HPP
#define LCSX_GEN_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lcsx {

/// SplitMix64 (Steele, Lea & Flood 2014): state advances by the golden-gamma
/// constant and each output is a finalized mix of the state. Chosen so a
/// generated corpus is byte-identical across platforms and languages; the
/// exact constants below are the commonly published ones.
class splitmix64 {
  public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). Plain modulo: the tiny bias is irrelevant here,
    /// cross-platform determinism is not.
    std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  private:
    std::uint64_t state_;
};

enum class instance_kind { uniform, planted, adversarial_decreasing, block_repeat };

const char* kind_name(instance_kind k);
instance_kind kind_from_name(const std::string& name);  // throws std::invalid_argument

struct instance_spec {
    instance_kind kind = instance_kind::uniform;
    std::size_t n_x = 0;
    std::size_t n_y = 0;
    std::size_t alphabet = 1;
    std::size_t planted_len = 0;  // planted kind only
    std::uint64_t seed = 0;
};

struct instance {
    std::vector<std::uint32_t> x;
    std::vector<std::uint32_t> y;
    /// Known lower bound on |LCS|: the planted length for planted instances,
    /// min(n_x, n_y) for a unary alphabet, otherwise 0.
    std::size_t lcs_lower_bound = 0;
};

/// Deterministic: the same spec always produces the same instance.
///
/// uniform: both sides i.i.d. over [0, alphabet).
/// planted: a shared random subsequence of planted_len is embedded at sorted
///   random positions of each side, independent noise elsewhere.
/// adversarial_decreasing: x = 0,1,...,n_x-1 and y its reverse (n_y and
///   alphabet ignored); LIS of the full order is 1, so all the work lands on
///   the peeling loop.
/// block_repeat: runs of one repeated symbol, run lengths up to
///   max(1, n/alphabet), independent per side.
///
/// Throws std::invalid_argument on bad specs (e.g. planted_len > min length).
instance generate(const instance_spec& spec);

}  // namespace lcsx

#endif
