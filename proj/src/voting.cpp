#include "aslgram/voting.hpp"

#include "aslgram/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace aslgram {

namespace {

// Taxonomies are small; a fixed array beats a hash table here.
constexpr int kMaxClasses = 16;

} // namespace

FrameLabel majority_vote_frame(const FrameVotes& votes, std::span<const FrameLabel> previous,
                               const VotingConfig& config, TieRng& rng) {
    if (votes.empty()) raise(ErrorKind::EmptyVotes, "frame has no covering window votes");

    std::array<int, kMaxClasses> counts{};
    for (const Vote& v : votes) ++counts[v.label];

    int max_count = 0;
    for (const Vote& v : votes) max_count = std::max(max_count, counts[v.label]);

    // Candidate set in canonical label order.
    std::array<ClassId, kMaxClasses> tied{};
    int tied_count = 0;
    for (int c = 0; c < kMaxClasses; ++c)
        if (counts[c] == max_count && counts[c] > 0) tied[tied_count++] = static_cast<ClassId>(c);

    if (tied_count == 1) return {tied[0], false};

    // Nearest previous final label that is among the candidates wins.
    const int history = static_cast<int>(previous.size());
    for (int j = 1; j <= config.lookback && j <= history; ++j) {
        const ClassId prior = previous[static_cast<std::size_t>(history - j)].label;
        if (counts[prior] == max_count) return {prior, true};
    }

    if (config.tie_break == TieBreak::LowestLabelIndex) return {tied[0], true};
    return {tied[rng() % static_cast<std::uint64_t>(tied_count)], true};
}

std::vector<FrameLabel> vote_stream(std::span<const FrameVotes> all_votes,
                                    const VotingConfig& config) {
    TieRng rng(config.seed);
    std::vector<FrameLabel> finals;
    finals.reserve(all_votes.size());
    for (std::size_t i = 0; i < all_votes.size(); ++i) {
        try {
            finals.push_back(majority_vote_frame(all_votes[i], finals, config, rng));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::EmptyVotes)
                raise(ErrorKind::EmptyVotes, "frame " + std::to_string(i) + " has no votes");
            throw;
        }
    }
    return finals;
}

} // namespace aslgram
