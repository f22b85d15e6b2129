#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "onto/detail/sha256.hpp"
#include "onto/detail/unicode_tables.hpp"
#include "onto/errors.hpp"

namespace onto {

namespace detail {

struct RankHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
        return std::hash<std::string_view>{}(s);
    }
    std::size_t operator()(const std::string& s) const {
        return std::hash<std::string_view>{}(s);
    }
};

using RankMap =
    std::unordered_map<std::string, std::uint32_t, RankHash, std::equal_to<>>;

inline bool in_ranges(char32_t cp, const CodepointRange* ranges, std::size_t n) {
    const CodepointRange* end = ranges + n;
    auto it = std::upper_bound(ranges, end, cp,
                               [](char32_t v, const CodepointRange& r) {
                                   return v < r.first;
                               });
    return it != ranges && (it - 1)->last >= cp;
}

inline bool is_letter(char32_t cp) {
    return in_ranges(cp, kLetterRanges, std::size(kLetterRanges));
}

inline bool is_number(char32_t cp) {
    return in_ranges(cp, kNumberRanges, std::size(kNumberRanges));
}

// Unicode White_Space (what the reference pattern's \s matches), not the
// ASCII or ECMAScript notion.
inline bool is_space(char32_t cp) {
    return in_ranges(cp, kWhitespaceRanges, std::size(kWhitespaceRanges));
}

inline bool is_newline(char32_t cp) { return cp == U'\r' || cp == U'\n'; }

// Decoded codepoints plus the byte offset where each starts; offsets has one
// trailing entry for the end of text.
struct DecodedText {
    std::vector<char32_t> cps;
    std::vector<std::size_t> offsets;
};

inline DecodedText decode_utf8(std::string_view text) {
    DecodedText d;
    d.cps.reserve(text.size());
    d.offsets.reserve(text.size() + 1);
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char b0 = text[i];
        std::size_t len = 1;
        char32_t cp = b0;
        if (b0 >= 0xf0)
            len = 4;
        else if (b0 >= 0xe0)
            len = 3;
        else if (b0 >= 0xc0)
            len = 2;
        if (len > 1) {
            if (i + len > text.size()) len = 1;
            cp = b0 & (0x7f >> len);
            for (std::size_t k = 1; k < len; ++k) {
                unsigned char bk = text[i + k];
                if ((bk & 0xc0) != 0x80) {
                    len = 1;
                    break;
                }
                cp = (cp << 6) | (bk & 0x3f);
            }
        }
        // A bare continuation or truncated sequence decodes as its lone
        // byte value, which classifies as "other" — deterministic, and
        // unreachable for text from our emitters.
        if (len == 1) cp = b0;
        d.offsets.push_back(i);
        d.cps.push_back(cp);
        i += len;
    }
    d.offsets.push_back(text.size());
    return d;
}

// The cl100k_base pre-tokenization pattern, matched alternative-by-
// alternative (leftmost alternative wins, as in the reference engine):
//   ('s|'S|'t|'T|'re|'rE|'Re|'RE|'ve|'vE|'Ve|'VE|'m|'M|'ll|'lL|'Ll|'LL|'d|'D)
//   | [^\r\n\p{L}\p{N}]?\p{L}+
//   | \p{N}{1,3}
//   |  ?[^\s\p{L}\p{N}]+[\r\n]*
//   | \s*[\r\n]+
//   | \s+(?!\S)
//   | \s+
class PreTokenizer {
public:
    explicit PreTokenizer(const DecodedText& d) : d_(d) {}

    // Returns codepoint-index ranges; every input codepoint lands in
    // exactly one piece.
    std::vector<std::pair<std::size_t, std::size_t>> pieces() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        std::size_t i = 0;
        const std::size_t n = d_.cps.size();
        while (i < n) {
            std::size_t j = match_at(i);
            out.emplace_back(i, j);
            i = j;
        }
        return out;
    }

private:
    std::size_t match_at(std::size_t i) const {
        const auto& cps = d_.cps;
        const std::size_t n = cps.size();

        if (cps[i] == U'\'') {
            static constexpr std::string_view suffixes[] = {
                "s", "S", "t", "T", "re", "rE", "Re", "RE", "ve", "vE",
                "Ve", "VE", "m", "M", "ll", "lL", "Ll", "LL", "d", "D"};
            for (std::string_view suf : suffixes) {
                if (i + 1 + suf.size() > n) continue;
                bool ok = true;
                for (std::size_t k = 0; k < suf.size(); ++k)
                    if (cps[i + 1 + k] != static_cast<char32_t>(suf[k])) {
                        ok = false;
                        break;
                    }
                if (ok) return i + 1 + suf.size();
            }
        }

        // [^\r\n\p{L}\p{N}]?\p{L}+
        if (is_letter(cps[i])) {
            std::size_t j = i + 1;
            while (j < n && is_letter(cps[j])) ++j;
            return j;
        }
        if (!is_newline(cps[i]) && !is_number(cps[i]) && i + 1 < n &&
            is_letter(cps[i + 1])) {
            std::size_t j = i + 2;
            while (j < n && is_letter(cps[j])) ++j;
            return j;
        }

        // \p{N}{1,3}
        if (is_number(cps[i])) {
            std::size_t j = i + 1;
            while (j < n && j < i + 3 && is_number(cps[j])) ++j;
            return j;
        }

        //  ?[^\s\p{L}\p{N}]+[\r\n]*
        {
            std::size_t k = (cps[i] == U' ' && i + 1 < n) ? i + 1 : i;
            if (!is_space(cps[k]) && !is_letter(cps[k]) && !is_number(cps[k])) {
                std::size_t j = k + 1;
                while (j < n && !is_space(cps[j]) && !is_letter(cps[j]) &&
                       !is_number(cps[j]))
                    ++j;
                while (j < n && is_newline(cps[j])) ++j;
                return j;
            }
        }

        // The rest only fire on whitespace.
        std::size_t j = i;
        while (j < n && is_space(cps[j])) ++j;

        // \s*[\r\n]+ — the match must end at the run's last CR/LF.
        std::size_t last_nl = n;
        for (std::size_t k = j; k > i; --k)
            if (is_newline(cps[k - 1])) {
                last_nl = k;
                break;
            }
        if (last_nl != n) return last_nl;

        // \s+(?!\S) — keep the final whitespace char for the next piece
        // when non-whitespace follows.
        if (j == n) return j;
        if (j - i > 1) return j - 1;

        // \s+
        return j;
    }

    const DecodedText& d_;
};

inline std::uint32_t rank_of(const RankMap& ranks, std::string_view piece) {
    auto it = ranks.find(piece);
    return it == ranks.end() ? std::numeric_limits<std::uint32_t>::max()
                             : it->second;
}

inline std::string decode_base64(std::string_view in, bool& ok) {
    auto val = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    ok = false;
    if (in.size() % 4 != 0 || in.empty()) return {};
    std::string out;
    out.reserve(in.size() / 4 * 3);
    for (std::size_t i = 0; i < in.size(); i += 4) {
        int v[4];
        int pads = 0;
        for (int k = 0; k < 4; ++k) {
            char c = in[i + k];
            if (c == '=' && i + 4 == in.size() && k >= 2) {
                v[k] = 0;
                ++pads;
            } else {
                v[k] = val(c);
                if (v[k] < 0 || pads > 0) return {};
            }
        }
        std::uint32_t chunk = (v[0] << 18) | (v[1] << 12) | (v[2] << 6) | v[3];
        out += static_cast<char>((chunk >> 16) & 0xff);
        if (pads < 2) out += static_cast<char>((chunk >> 8) & 0xff);
        if (pads < 1) out += static_cast<char>(chunk & 0xff);
    }
    ok = true;
    return out;
}

} // namespace detail

struct TokenizerModel {
    detail::RankMap ranks;
    std::string pattern;
    std::string name;
    std::string rank_file_sha256;
};

struct TokenSpan {
    std::uint32_t id;
    std::size_t begin; // byte offsets into the encoded text
    std::size_t end;

    bool operator==(const TokenSpan&) const = default;
};

inline constexpr std::string_view kCl100kPattern =
    "('s|'S|'t|'T|'re|'rE|'Re|'RE|'ve|'vE|'Ve|'VE|'m|'M|'ll|'lL|'Ll|'LL|'d|'D)"
    "|[^\\r\\n\\p{L}\\p{N}]?\\p{L}+|\\p{N}{1,3}| ?[^\\s\\p{L}\\p{N}]+[\\r\\n]*"
    "|\\s*[\\r\\n]+|\\s+(?!\\S)|\\s+";

// Reads a `.tiktoken` rank file: one `<base64 token> <rank>` pair per line.
inline TokenizerModel load_model(const std::string& rank_file) {
    std::ifstream in(rank_file, std::ios::binary);
    if (!in) throw MalformedRankFile(0, "cannot open " + rank_file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();

    TokenizerModel model;
    model.pattern = kCl100kPattern;
    model.rank_file_sha256 = detail::Sha256::hex(content);
    std::size_t slash = rank_file.find_last_of("/\\");
    std::string base =
        slash == std::string::npos ? rank_file : rank_file.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    model.name = dot == std::string::npos ? base : base.substr(0, dot);

    std::size_t line_no = 0;
    std::string_view rest = content;
    while (!rest.empty()) {
        ++line_no;
        std::size_t nl = rest.find('\n');
        std::string_view line =
            nl == std::string_view::npos ? rest : rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{}
                                            : rest.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        std::size_t sp = line.find(' ');
        if (sp == std::string_view::npos)
            throw MalformedRankFile(line_no, "expected '<base64> <rank>'");
        bool ok = false;
        std::string token = detail::decode_base64(line.substr(0, sp), ok);
        if (!ok || token.empty())
            throw MalformedRankFile(line_no, "invalid base64 token");
        std::string_view rank_text = line.substr(sp + 1);
        std::uint32_t rank = 0;
        auto [p, ec] = std::from_chars(rank_text.data(),
                                       rank_text.data() + rank_text.size(), rank);
        if (ec != std::errc{} || p != rank_text.data() + rank_text.size())
            throw MalformedRankFile(line_no, "invalid rank");
        if (!model.ranks.emplace(std::move(token), rank).second)
            throw MalformedRankFile(line_no, "duplicate token bytes");
    }
    if (model.ranks.empty()) throw MalformedRankFile(0, "no entries");
    for (int b = 0; b < 256; ++b) {
        char c = static_cast<char>(b);
        if (model.ranks.find(std::string_view(&c, 1)) == model.ranks.end())
            throw MalformedRankFile(
                0, "vocabulary is missing single-byte token " + std::to_string(b));
    }
    return model;
}

namespace detail {

// Greedy lowest-rank pair merging over one pre-tokenized piece.
inline void byte_pair_merge(const RankMap& ranks, std::string_view piece,
                            std::size_t base_offset,
                            std::vector<TokenSpan>& out) {
    constexpr std::uint32_t kMax = std::numeric_limits<std::uint32_t>::max();

    // Whole-piece vocabulary hit: one token (the reference implementation
    // checks this before merging).
    if (std::uint32_t r = rank_of(ranks, piece); r != kMax) {
        out.push_back({r, base_offset, base_offset + piece.size()});
        return;
    }

    struct Part {
        std::size_t start;
        std::uint32_t rank;
    };
    std::vector<Part> parts(piece.size() + 1);
    auto pair_rank = [&](std::size_t idx) -> std::uint32_t {
        if (idx + 2 >= parts.size()) return kMax;
        return rank_of(ranks, piece.substr(parts[idx].start,
                                           parts[idx + 2].start -
                                               parts[idx].start));
    };
    for (std::size_t k = 0; k < parts.size(); ++k)
        parts[k] = {k, kMax};
    for (std::size_t k = 0; k + 2 < parts.size(); ++k)
        parts[k].rank = pair_rank(k);

    while (true) {
        std::size_t best = parts.size();
        std::uint32_t best_rank = kMax;
        for (std::size_t k = 0; k + 1 < parts.size(); ++k)
            if (parts[k].rank < best_rank) {
                best_rank = parts[k].rank;
                best = k;
            }
        if (best_rank == kMax) break;
        parts.erase(parts.begin() + best + 1);
        parts[best].rank = pair_rank(best);
        if (best > 0) parts[best - 1].rank = pair_rank(best - 1);
    }

    for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
        std::string_view tok =
            piece.substr(parts[k].start, parts[k + 1].start - parts[k].start);
        out.push_back({rank_of(ranks, tok), base_offset + parts[k].start,
                       base_offset + parts[k + 1].start});
    }
}

} // namespace detail

// Token ids with the byte range each token covers; the spans partition the
// input exactly.
inline std::vector<TokenSpan> encode_with_spans(const TokenizerModel& model,
                                                std::string_view text) {
    std::vector<TokenSpan> out;
    if (text.empty()) return out;
    detail::DecodedText d = detail::decode_utf8(text);
    detail::PreTokenizer pre(d);
    for (auto [a, b] : pre.pieces()) {
        std::size_t lo = d.offsets[a];
        std::size_t hi = d.offsets[b];
        detail::byte_pair_merge(model.ranks, text.substr(lo, hi - lo), lo, out);
    }
    return out;
}

inline std::size_t count_tokens(const TokenizerModel& model,
                                std::string_view text) {
    return encode_with_spans(model, text).size();
}

} // namespace onto
