#include "mckay/group_spec.hpp"

#include <cctype>

#include "mckay/errors.hpp"
#include "mckay/serialize.hpp"

namespace mckay {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    GroupSpec parse() {
        GroupSpec spec = parse_spec_node();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return spec;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("spec parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(const std::string& word) {
        if (text_.compare(pos_, word.size(), word) == 0) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_int() {
        const size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000) fail("parameter out of range");
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return static_cast<int>(value);
    }

    GroupSpec parse_family() {
        skip_ws();
        GroupSpec spec;
        spec.kind = GroupSpec::Kind::Family;
        if (pos_ >= text_.size())
            fail("expected a family (C<n>, D<n>, 2T, 2O, 2I)");
        const char c = text_[pos_];
        if (c == 'C' || c == 'D') {
            ++pos_;
            spec.family = c;
            spec.n = parse_int();
            return spec;
        }
        if (c == '2') {
            ++pos_;
            if (pos_ < text_.size() &&
                (text_[pos_] == 'T' || text_[pos_] == 'O' || text_[pos_] == 'I')) {
                spec.family = text_[pos_];
                ++pos_;
                return spec;
            }
            fail("expected 2T, 2O, or 2I");
        }
        fail("expected a family (C<n>, D<n>, 2T, 2O, 2I)");
    }

    GroupSpec parse_spec_node() {
        skip_ws();
        if (consume("prod(")) {
            GroupSpec spec;
            spec.kind = GroupSpec::Kind::Prod;
            spec.left = std::make_unique<GroupSpec>(parse_spec_node());
            expect(',');
            spec.right = std::make_unique<GroupSpec>(parse_spec_node());
            expect(')');
            return spec;
        }
        if (consume("diag(")) {
            GroupSpec spec;
            spec.kind = GroupSpec::Kind::Diag;
            spec.left = std::make_unique<GroupSpec>(parse_family());
            expect(')');
            return spec;
        }
        if (consume("gens:")) {
            GroupSpec spec;
            spec.kind = GroupSpec::Kind::Gens;
            size_t end = text_.size();
            while (end > pos_ && std::isspace(static_cast<unsigned char>(text_[end - 1])))
                --end;
            skip_ws();
            spec.path = text_.substr(pos_, end > pos_ ? end - pos_ : 0);
            if (spec.path.empty()) fail("expected a file path after gens:");
            pos_ = text_.size();
            return spec;
        }
        return parse_family();
    }
};

} // namespace

GroupSpec parse_spec(const std::string& text) {
    return Parser(text).parse();
}

std::string to_string(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Family:
            if (spec.family == 'C' || spec.family == 'D')
                return std::string(1, spec.family) + std::to_string(spec.n);
            return std::string("2") + spec.family;
        case GroupSpec::Kind::Prod:
            return "prod(" + to_string(*spec.left) + "," + to_string(*spec.right) + ")";
        case GroupSpec::Kind::Diag:
            return "diag(" + to_string(*spec.left) + ")";
        case GroupSpec::Kind::Gens:
            return "gens:" + spec.path;
    }
    return "";
}

FiniteSubgroup build_group(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Family:
            switch (spec.family) {
                case 'C': return cyclic(spec.n);
                case 'D': return binary_dihedral(spec.n);
                case 'T': return binary_tetrahedral();
                case 'O': return binary_octahedral();
                case 'I': return binary_icosahedral();
            }
            throw UsageError("build_group: unknown family");
        case GroupSpec::Kind::Prod:
            return product(build_group(*spec.left), build_group(*spec.right));
        case GroupSpec::Kind::Diag:
            return diagonal(build_group(*spec.left));
        case GroupSpec::Kind::Gens:
            return from_generators(read_gens_file(spec.path), kClosureCap);
    }
    throw UsageError("build_group: malformed spec");
}

} // namespace mckay
