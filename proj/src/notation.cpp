#include "sfs/notation.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "sfs/error.hpp"

namespace sfs {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }

    void expect_word(const char* word) {
        skip_ws();
        for (const char* p = word; *p; ++p) {
            if (pos_ >= text_.size() || text_[pos_] != *p) fail(std::string("expected '") + word + "'");
            ++pos_;
        }
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        unsigned long long magnitude = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            magnitude = magnitude * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
            if (magnitude > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
                pos_ = start;
                fail("integer out of range");
            }
            ++pos_;
        }
        long long value = static_cast<long long>(magnitude);
        return negative ? -value : value;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << what << " at offset " << pos_ << " in '" << text_ << "'";
        throw Error(ErrorCode::Parse, os.str());
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

SeifertData parse_loose(const std::string& text) {
    Scanner s(text);
    SeifertData data;
    s.expect_word("SFS");
    s.expect('[');
    s.expect_word("g");
    s.expect('=');
    data.base_genus = s.integer();
    s.expect(';');
    s.expect_word("b");
    s.expect('=');
    data.b = s.integer();
    s.expect(';');
    if (!s.try_consume(']')) {
        do {
            s.expect('(');
            long long alpha = s.integer();
            s.expect(',');
            long long beta = s.integer();
            s.expect(')');
            data.exceptional.push_back({alpha, beta});
        } while (s.try_consume(','));
        s.expect(']');
    }
    if (!s.at_end()) s.fail("trailing characters");
    return data;
}

SeifertInvariants parse_manifold(const std::string& text) {
    return normalize(parse_loose(text));
}

std::string print_manifold(const SeifertInvariants& m) {
    std::ostringstream os;
    os << "SFS[g=" << m.base_genus() << "; b=" << m.b() << ";";
    bool first = true;
    for (const auto& f : m.exceptional()) {
        os << (first ? " " : ",") << "(" << f.alpha << "," << f.beta << ")";
        first = false;
    }
    os << "]";
    return os.str();
}

} // namespace sfs
