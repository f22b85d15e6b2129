#pragma once

#include <string>
#include <string_view>

namespace onto {

// Byte roles assigned while emitting, consumed by the composition
// analyzer. Tokens are attributed to categories by majority byte.
enum class ByteCategory : char {
    Key = 'k',
    Punctuation = 'p',
    Value = 'v',
    StructureIndent = 's',
    Whitespace = 'w',
};

// Emitted text plus one role character per byte.
struct TaggedText {
    std::string text;
    std::string roles;

    bool consistent() const { return text.size() == roles.size(); }
};

class TagWriter {
public:
    void put(std::string_view s, ByteCategory cat) {
        out_.text += s;
        out_.roles.append(s.size(), static_cast<char>(cat));
    }

    void put(char c, ByteCategory cat) {
        out_.text += c;
        out_.roles += static_cast<char>(cat);
    }

    std::size_t size() const { return out_.text.size(); }

    TaggedText take() { return std::move(out_); }

private:
    TaggedText out_;
};

} // namespace onto
