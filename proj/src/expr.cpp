#include "cograph/cotree.hpp"

#include <cctype>
#include <charconv>

namespace cograph {

ParseError::ParseError(std::size_t position, const std::string& message)
    : InputError("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

constexpr int kMaxCount = 1'000'000;

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Cotree parse() {
        Cotree t = expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError(pos_, "unexpected trailing input");
        }
        return t;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek_digit() {
        skip_space();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    int integer() {
        skip_space();
        const std::size_t start = pos_;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == text_.data() + pos_) {
            throw ParseError(start, "expected an integer");
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        if (value > kMaxCount) {
            throw ParseError(start, "count too large");
        }
        return value;
    }

    int positive(const char* what) {
        const std::size_t start = pos_;
        const int k = integer();
        if (k < 1) {
            throw ParseError(start, std::string(what) + " must be at least 1");
        }
        return k;
    }

    Cotree expr() {
        if (peek_digit()) {
            const int k = positive("repetition count");
            expect('*');
            return repeat(k, expr());
        }
        skip_space();
        if (pos_ >= text_.size()) {
            throw ParseError(pos_, "unexpected end of input");
        }
        const std::size_t start = pos_;
        const char head = text_[pos_++];
        switch (head) {
            case 'K':
            case 'I': {
                expect('(');
                const int k = positive(head == 'K' ? "K(k) size" : "I(k) size");
                expect(')');
                return head == 'K' ? Cotree::complete(k) : Cotree::edgeless(k);
            }
            case 'U':
            case 'J': {
                expect('(');
                std::vector<Cotree> parts;
                arguments(parts);
                expect(')');
                return Cotree::combine(head == 'U' ? NodeKind::disjoint_union : NodeKind::join, parts);
            }
            case 'C': {
                expect('(');
                Cotree inner = expr();
                expect(')');
                return complement(inner);
            }
            default:
                throw ParseError(start, std::string("unknown constructor '") + head + "'");
        }
    }

    void arguments(std::vector<Cotree>& parts) {
        for (;;) {
            if (peek_digit()) {
                const int k = positive("repetition count");
                expect('*');
                Cotree item = expr();
                parts.insert(parts.end(), static_cast<std::size_t>(k), item);
            } else {
                parts.push_back(expr());
            }
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            return;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool all_leaf_children(const CotreeNode& node, const std::vector<CotreeNode>& nodes) {
    for (int c : node.children) {
        if (nodes[c].kind != NodeKind::leaf) {
            return false;
        }
    }
    return true;
}

void write_expr(const Cotree& t, int i, std::string& out) {
    const auto& node = t.node(i);
    if (node.kind == NodeKind::leaf) {
        out += "K(1)";
        return;
    }
    const bool is_join = node.kind == NodeKind::join;
    if (all_leaf_children(node, t.nodes())) {
        out += is_join ? "K(" : "I(";
        out += std::to_string(node.children.size());
        out += ')';
        return;
    }
    out += is_join ? "J(" : "U(";
    bool first = true;
    for (int c : node.children) {
        if (!first) {
            out += ',';
        }
        first = false;
        write_expr(t, c, out);
    }
    out += ')';
}

}  // namespace

Cotree parse_expr(std::string_view text) {
    return ExprParser(text).parse();
}

std::string to_expr(const Cotree& t) {
    if (t.empty()) {
        return "";
    }
    std::string out;
    write_expr(t, t.root(), out);
    return out;
}

}  // namespace cograph
