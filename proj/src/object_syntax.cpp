#include "sod/object_syntax.hpp"

#include <algorithm>

namespace sod {

namespace {

std::string strip_spaces(const std::string& s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

std::vector<std::string> split_top_level(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[')
            ++depth;
        else if (c == ']')
            --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        }
        else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

BundleExpression parse_factor(const std::string& text, Context ctx)
{
    if (text == "O")
        return BundleExpression::unit(ctx);
    if (text.size() >= 3 && text.back() == ']' && text[1] == '[') {
        const std::string inner = text.substr(2, text.size() - 3);
        if (text[0] == 'U')
            return BundleExpression::u_schur(ctx, Weight::parse(inner, ctx.k));
        if (text[0] == 'Q')
            return BundleExpression::q_schur(ctx, Weight::parse(inner, ctx.n - ctx.k));
    }
    throw InputError("cannot parse object factor '" + text + "'");
}

}  // namespace

ParsedObject parse_object(const std::string& raw, Context ctx)
{
    std::string text = strip_spaces(raw);
    ParsedObject out;

    if (text.rfind("push:", 0) == 0) {
        out.kind = TotKind::pushforward;
        text = text.substr(5);
    }
    else if (text.rfind("pull:", 0) == 0) {
        out.kind = TotKind::pullback;
        text = text.substr(5);
    }

    int shift = 0;
    if (const size_t at = text.rfind('@'); at != std::string::npos) {
        const std::string suffix = text.substr(at + 1);
        size_t pos = 0;
        try {
            shift = std::stoi(suffix, &pos);
        }
        catch (const std::exception&) {
            throw InputError("bad shift suffix '@" + suffix + "'");
        }
        if (pos != suffix.size())
            throw InputError("bad shift suffix '@" + suffix + "'");
        text = text.substr(0, at);
    }

    if (text.empty())
        throw InputError("empty object");

    BundleExpression expr = BundleExpression::zero(ctx);
    for (const std::string& term : split_top_level(text, '+')) {
        if (term.empty())
            throw InputError("empty summand in '" + raw + "'");
        BundleExpression product = BundleExpression::unit(ctx);
        for (const std::string& factor : split_top_level(term, '*'))
            product = tensor_bundles(product, parse_factor(factor, ctx));
        expr.add(product);
    }

    out.object = GrObject{expr, shift, text + (shift != 0 ? "@" + std::to_string(shift) : "")};
    if (out.kind)
        out.object.name = (*out.kind == TotKind::pushforward ? "push:" : "pull:") + out.object.name;
    return out;
}

}  // namespace sod
