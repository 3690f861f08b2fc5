#include "metriscope/parser.hpp"

#include "metriscope/errors.hpp"
#include "metriscope/halstead.hpp"
#include "metriscope/line_count.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace metriscope {

namespace {

bool is_modifier(const Token &t)
{
    static const std::set<std::string_view> mods{
        "public",  "protected", "private",  "static",       "final",    "abstract",
        "native",  "transient", "volatile", "synchronized", "strictfp", "default",
    };
    if (t.kind == TokenKind::Keyword)
        return mods.count(t.text) != 0;
    return t.is_ident() && (t.text == "sealed");
}

bool starts_upper(std::string_view s) { return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])); }

std::string simple_of(std::string_view name)
{
    auto dot = name.rfind('.');
    return std::string(dot == std::string_view::npos ? name : name.substr(dot + 1));
}

std::string strip_array(const std::string &t)
{
    if (t.size() > 2 && t.compare(t.size() - 2, 2, "[]") == 0)
        return t.substr(0, t.size() - 2);
    return "?";
}

bool is_array(const std::string &t) { return t.size() > 2 && t.compare(t.size() - 2, 2, "[]") == 0; }

// Shared token-stream helpers for declarations and bodies.
class TokenCursor {
public:
    explicit TokenCursor(std::span<const Token> toks) : t_(toks) {}

    const Token &at(std::size_t i) const { return i < t_.size() ? t_[i] : eof(); }
    std::size_t size() const { return t_.size(); }

    static const Token &eof()
    {
        static const Token e{};
        return e;
    }

    // Index of the bracket closing the one at `i`, or `limit` when missing.
    std::size_t match(std::size_t i, std::size_t limit) const
    {
        const std::string open = at(i).text;
        const std::string close = open == "(" ? ")" : open == "[" ? "]" : "}";
        int depth = 0;
        for (std::size_t k = i; k < limit && k < t_.size(); ++k) {
            const Token &tk = at(k);
            if (tk.kind != TokenKind::Operator)
                continue;
            if (tk.text == open)
                ++depth;
            else if (tk.text == close && --depth == 0)
                return k;
        }
        return limit;
    }

    // Braces must balance; anything else is an unbalanced block.
    std::size_t match_brace(std::size_t i) const
    {
        std::size_t limit = t_.size();
        int depth = 0;
        for (std::size_t k = i; k < limit; ++k) {
            const Token &tk = at(k);
            if (tk.is_op("{"))
                ++depth;
            else if (tk.is_op("}") && --depth == 0)
                return k;
        }
        throw UnbalancedBlock(at(i).line);
    }

    std::size_t skip_generic_args(std::size_t i) const
    {
        // at(i) is "<"; returns index after the matching ">" or npos when the
        // tokens cannot be a type argument list.
        int depth = 0;
        for (std::size_t k = i; k < t_.size(); ++k) {
            const Token &tk = at(k);
            if (tk.is_op("<")) {
                ++depth;
            } else if (tk.is_op(">")) {
                if (--depth == 0)
                    return k + 1;
            } else if (tk.is_ident() || tk.is_op(".") || tk.is_op(",") || tk.is_op("?") || tk.is_op("&") ||
                       tk.is_op("[") || tk.is_op("]") || tk.is_op("@") || tk.is_kw("extends") ||
                       tk.is_kw("super") || (tk.kind == TokenKind::Keyword && is_primitive_type(tk.text))) {
                continue;
            } else {
                return std::string::npos;
            }
        }
        return std::string::npos;
    }

    std::size_t skip_annotation(std::size_t i) const
    {
        // at(i) is "@" and not "@interface".
        ++i;
        while (at(i).is_ident() && at(i + 1).is_op(".") && at(i + 2).is_ident())
            i += 2;
        if (at(i).is_ident())
            ++i;
        if (at(i).is_op("("))
            i = match(i, size()) + 1;
        return i;
    }

    // Parses a type starting at i. Returns (index after, text) or nullopt.
    std::optional<std::pair<std::size_t, std::string>> parse_type(std::size_t i) const
    {
        while (at(i).is_op("@") && !at(i + 1).is_kw("interface"))
            i = skip_annotation(i);
        std::string text;
        const Token &first = at(i);
        if (first.kind == TokenKind::Keyword && is_primitive_type(first.text)) {
            text = first.text;
            ++i;
        } else if (first.is_ident()) {
            text = first.text;
            ++i;
            for (;;) {
                if (at(i).is_op("<")) {
                    std::size_t after = skip_generic_args(i);
                    if (after == std::string::npos)
                        return std::nullopt;
                    for (std::size_t k = i; k < after; ++k)
                        text += at(k).kind == TokenKind::Keyword && (at(k).text == "extends" || at(k).text == "super")
                                    ? " " + at(k).text + " "
                                    : at(k).text;
                    i = after;
                }
                if (at(i).is_op(".") && at(i + 1).is_ident()) {
                    text += "." + at(i + 1).text;
                    i += 2;
                    continue;
                }
                break;
            }
        } else {
            return std::nullopt;
        }
        while (at(i).is_op("[") && at(i + 1).is_op("]")) {
            text += "[]";
            i += 2;
        }
        if (at(i).is_op("...")) {
            text += "...";
            ++i;
        }
        return std::make_pair(i, text);
    }

protected:
    std::span<const Token> t_;
};

// ---------------------------------------------------------------------------
// Declarations

struct MethodDecl {
    std::size_t info_index = 0;
    std::vector<std::pair<std::string, std::string>> params; // name, type
    std::string return_type;
    std::optional<std::pair<std::size_t, std::size_t>> body; // token range inside braces
};

struct ClassDecl {
    ClassInfo info;
    std::string outer;
    std::map<std::string, std::string> fields;
    std::vector<MethodDecl> methods;
    std::vector<std::pair<std::size_t, std::size_t>> initializers;
    int first_line = 0;
    int last_line = 0;
};

class FileIndex {
public:
    std::vector<std::unique_ptr<ClassDecl>> classes;

    const ClassDecl *find(const std::string &type_ref, const ClassDecl *context) const
    {
        std::string erased = erase_type(type_ref);
        if (erased.empty() || erased == "?")
            return nullptr;
        const ClassDecl *best = nullptr;
        for (const auto &c : classes) {
            const std::string &n = c->info.name;
            bool match = n == erased ||
                         (n.size() > erased.size() && n.compare(n.size() - erased.size(), erased.size(), erased) == 0 &&
                          n[n.size() - erased.size() - 1] == '.');
            if (!match)
                continue;
            // Prefer a class nested in the context.
            if (context != nullptr && n.rfind(context->info.name + ".", 0) == 0)
                return c.get();
            if (best == nullptr)
                best = c.get();
        }
        return best;
    }

    const ClassDecl *superclass(const ClassDecl *c) const
    {
        if (c == nullptr || c->info.superclasses.empty())
            return nullptr;
        const ClassDecl *s = find(c->info.superclasses.front(), c);
        return s == c ? nullptr : s;
    }

    std::optional<std::string> field_type(const ClassDecl *c, const std::string &name) const
    {
        for (int guard = 0; c != nullptr && guard < 32; ++guard, c = superclass(c)) {
            auto it = c->fields.find(name);
            if (it != c->fields.end())
                return it->second;
        }
        return std::nullopt;
    }

    // Owner class declaring a field visible from c (own, inherited within
    // the file, or from an enclosing class).
    const ClassDecl *field_owner(const ClassDecl *c, const std::string &name) const
    {
        for (const ClassDecl *scope = c; scope != nullptr; scope = enclosing(scope)) {
            const ClassDecl *k = scope;
            for (int guard = 0; k != nullptr && guard < 32; ++guard, k = superclass(k)) {
                if (k->fields.count(name) != 0)
                    return scope == c ? c : scope;
            }
        }
        return nullptr;
    }

    const ClassDecl *enclosing(const ClassDecl *c) const
    {
        if (c->outer.empty())
            return nullptr;
        for (const auto &k : classes) {
            if (k->info.name == c->outer)
                return k.get();
        }
        return nullptr;
    }

    std::string return_type(const ClassDecl *c, const std::string &method, std::size_t arity) const
    {
        for (int guard = 0; c != nullptr && guard < 32; ++guard, c = superclass(c)) {
            for (const auto &m : c->methods) {
                const MethodInfo &mi = c->info.methods[m.info_index];
                if (mi.name == method && mi.parameter_types.size() == arity && !m.return_type.empty())
                    return m.return_type;
            }
        }
        return "?";
    }
};

class DeclParser : public TokenCursor {
public:
    DeclParser(std::span<const Token> toks, std::string path, FileIndex &index)
        : TokenCursor(toks), path_(std::move(path)), index_(index)
    {
    }

    std::string package;
    int top_level_types = 0;

    void parse_unit()
    {
        std::size_t i = 0;
        // Annotations may precede the package declaration.
        std::size_t j = i;
        while (at(j).is_op("@") && !at(j + 1).is_kw("interface"))
            j = skip_annotation(j);
        if (at(j).is_kw("package")) {
            i = j + 1;
            while (!at(i).is_op(";")) {
                if (at(i).kind == TokenKind::EndOfFile)
                    fail(at(i).line, {";"});
                package += at(i).text;
                ++i;
            }
            ++i;
        }
        while (at(i).is_kw("import")) {
            while (!at(i).is_op(";") && at(i).kind != TokenKind::EndOfFile)
                ++i;
            ++i;
        }
        while (at(i).kind != TokenKind::EndOfFile) {
            if (at(i).is_op(";")) {
                ++i;
                continue;
            }
            if (at(i).is_op("}"))
                throw UnbalancedBlock(at(i).line);
            if (at(i).is_ident() && at(i).text == "module") {
                // module-info: nothing to measure.
                std::size_t b = i;
                while (!at(b).is_op("{") && at(b).kind != TokenKind::EndOfFile)
                    ++b;
                i = match_brace(b) + 1;
                continue;
            }
            i = parse_type_decl(i, "");
            ++top_level_types;
        }
    }

private:
    [[noreturn]] void fail(int line, std::vector<std::string> expected) const
    {
        throw SyntaxError(path_, line, std::move(expected));
    }

    struct Modifiers {
        Visibility visibility = Visibility::Default;
        bool is_static = false;
        bool is_abstract = false;
        bool is_default = false;
        bool explicit_visibility = false;
        int first_line = 0;
    };

    std::size_t parse_modifiers(std::size_t i, Modifiers &m) const
    {
        m.first_line = at(i).line;
        for (;;) {
            const Token &t = at(i);
            if (t.is_op("@") && !at(i + 1).is_kw("interface")) {
                i = skip_annotation(i);
                continue;
            }
            if (t.is_ident() && t.text == "non" && at(i + 1).is_op("-") && at(i + 2).is_ident() &&
                at(i + 2).text == "sealed") {
                i += 3;
                continue;
            }
            if (!is_modifier(t))
                break;
            // "default" opens a switch label elsewhere, but only modifiers
            // reach here.
            if (t.text == "public" || t.text == "protected" || t.text == "private") {
                m.visibility = t.text == "public"      ? Visibility::Public
                               : t.text == "protected" ? Visibility::Protected
                                                       : Visibility::Private;
                m.explicit_visibility = true;
            } else if (t.text == "static") {
                m.is_static = true;
            } else if (t.text == "abstract") {
                m.is_abstract = true;
            } else if (t.text == "default") {
                m.is_default = true;
            }
            ++i;
        }
        return i;
    }

    static bool is_type_keyword(const Token &t, const Token &next)
    {
        return t.is_kw("class") || t.is_kw("interface") || t.is_kw("enum") ||
               (t.is_op("@") && next.is_kw("interface")) ||
               (t.is_ident() && t.text == "record" && next.is_ident());
    }

    std::size_t parse_type_decl(std::size_t i, const std::string &outer)
    {
        Modifiers mods;
        i = parse_modifiers(i, mods);
        const Token &kw = at(i);
        if (!is_type_keyword(kw, at(i + 1)))
            fail(kw.line, {"class", "interface", "enum", "record"});

        auto decl = std::make_unique<ClassDecl>();
        ClassDecl &c = *decl;
        c.first_line = mods.first_line;
        c.outer = outer;
        bool is_interface = kw.is_kw("interface") || kw.is_op("@");
        bool is_enum = kw.is_kw("enum");
        bool is_record = kw.is_ident();
        i += kw.is_op("@") ? 2 : 1;
        if (!at(i).is_ident())
            fail(at(i).line, {"identifier"});
        const std::string simple = at(i).text;
        ++i;
        std::string prefix = outer.empty() ? package : outer;
        c.info.name = prefix.empty() ? simple : prefix + "." + simple;
        c.info.kind = is_interface ? ClassKind::Interface
                      : mods.is_abstract ? ClassKind::AbstractClass
                                         : ClassKind::Class;
        c.info.file = path_;

        if (at(i).is_op("<")) {
            std::size_t after = skip_generic_args(i);
            if (after == std::string::npos)
                fail(at(i).line, {"type parameters"});
            i = after;
        }
        if (is_record) {
            if (!at(i).is_op("("))
                fail(at(i).line, {"("});
            std::size_t close = match(i, size());
            std::size_t k = i + 1;
            while (k < close) {
                auto ty = parse_type(k);
                if (!ty || !at(ty->first).is_ident())
                    fail(at(k).line, {"record component"});
                AttributeInfo a;
                a.name = at(ty->first).text;
                a.declared_type = ty->second;
                a.visibility = Visibility::Private;
                c.fields[a.name] = a.declared_type;
                c.info.attributes.push_back(std::move(a));
                k = ty->first + 1;
                if (at(k).is_op(","))
                    ++k;
            }
            i = close + 1;
        }
        for (;;) {
            if (at(i).is_kw("extends") || at(i).is_kw("implements") ||
                (at(i).is_ident() && at(i).text == "permits")) {
                bool record_parents = !(at(i).is_ident());
                ++i;
                for (;;) {
                    auto ty = parse_type(i);
                    if (!ty)
                        fail(at(i).line, {"type"});
                    if (record_parents)
                        c.info.superclasses.push_back(erase_type(ty->second));
                    i = ty->first;
                    if (!at(i).is_op(","))
                        break;
                    ++i;
                }
                continue;
            }
            break;
        }
        if (!at(i).is_op("{"))
            fail(at(i).line, {"{"});
        std::size_t close = match_brace(i);
        c.last_line = at(close).line;

        ClassDecl *self = decl.get();
        index_.classes.push_back(std::move(decl));
        parse_class_body(*self, i + 1, close, is_interface, is_enum);
        return close + 1;
    }

    void parse_class_body(ClassDecl &c, std::size_t i, std::size_t close, bool is_interface, bool is_enum)
    {
        if (is_enum) {
            // Constants up to the first ";" (or the end of the body).
            while (i < close && !at(i).is_op(";")) {
                if (at(i).is_op("@")) {
                    i = skip_annotation(i);
                    continue;
                }
                if (at(i).is_op("(")) {
                    i = match(i, close) + 1;
                    continue;
                }
                if (at(i).is_op("{")) {
                    i = match_brace(i) + 1;
                    continue;
                }
                ++i;
            }
            if (i < close)
                ++i;
        }
        while (i < close) {
            const Token &t = at(i);
            if (t.is_op(";")) {
                ++i;
                continue;
            }
            Modifiers mods;
            std::size_t start = i;
            i = parse_modifiers(i, mods);
            if (at(i).is_op("{")) {
                std::size_t end = match_brace(i);
                c.initializers.emplace_back(i + 1, end);
                i = end + 1;
                continue;
            }
            if (is_type_keyword(at(i), at(i + 1))) {
                i = parse_type_decl(start, c.info.name);
                continue;
            }
            if (at(i).is_op("<")) {
                std::size_t after = skip_generic_args(i);
                if (after == std::string::npos)
                    fail(at(i).line, {"type parameters"});
                i = after;
            }
            Visibility vis = mods.visibility;
            if (is_interface && !mods.explicit_visibility)
                vis = Visibility::Public;

            const std::string simple = simple_of(c.info.name);
            if (at(i).is_ident() && at(i).text == simple && at(i + 1).is_op("(")) {
                i = parse_method(c, i, simple, "", vis, mods, false, close);
                continue;
            }
            // Compact canonical record constructor: Name {
            if (at(i).is_ident() && at(i).text == simple && at(i + 1).is_op("{")) {
                std::size_t end = match_brace(i + 1);
                MethodInfo m;
                m.name = simple;
                m.visibility = vis;
                MethodDecl d;
                d.info_index = c.info.methods.size();
                d.body = std::make_pair(i + 2, end);
                m.lines = at(end).line - mods.first_line + 1;
                c.info.methods.push_back(std::move(m));
                c.methods.push_back(std::move(d));
                i = end + 1;
                continue;
            }
            auto ty = parse_type(i);
            if (!ty)
                fail(at(i).line, {"field", "method", "constructor", "type declaration"});
            i = ty->first;
            if (!at(i).is_ident())
                fail(at(i).line, {"identifier"});
            if (at(i + 1).is_op("(")) {
                i = parse_method(c, i, at(i).text, ty->second, vis, mods, is_interface, close);
                continue;
            }
            i = parse_fields(c, i, ty->second, vis, mods, is_interface, close);
        }
    }

    std::size_t parse_method(ClassDecl &c, std::size_t i, const std::string &name, const std::string &return_type,
                             Visibility vis, const Modifiers &mods, bool in_interface, std::size_t limit)
    {
        MethodInfo m;
        m.name = name;
        m.visibility = vis;
        m.is_static = mods.is_static;
        MethodDecl d;
        d.return_type = erase_type(return_type) == "void" ? "" : return_type;

        std::size_t open = i + 1;
        std::size_t close = match(open, limit);
        if (close >= limit)
            fail(at(open).line, {")"});
        std::size_t k = open + 1;
        while (k < close) {
            while (at(k).is_kw("final") || (at(k).is_op("@") && !at(k + 1).is_kw("interface")))
                k = at(k).is_op("@") ? skip_annotation(k) : k + 1;
            auto ty = parse_type(k);
            if (!ty)
                fail(at(k).line, {"parameter type"});
            k = ty->first;
            std::string type = ty->second;
            if (at(k).is_kw("this")) {
                // Receiver parameter: not a real parameter.
                ++k;
            } else {
                if (!at(k).is_ident())
                    fail(at(k).line, {"parameter name"});
                std::string pname = at(k).text;
                ++k;
                while (at(k).is_op("[") && at(k + 1).is_op("]")) {
                    type += "[]";
                    k += 2;
                }
                m.parameter_types.push_back(type);
                d.params.emplace_back(pname, type);
            }
            if (at(k).is_op(","))
                ++k;
            else if (k != close)
                fail(at(k).line, {",", ")"});
        }
        i = close + 1;
        while (at(i).is_op("[") && at(i + 1).is_op("]"))
            i += 2;
        if (at(i).is_kw("throws")) {
            ++i;
            while (!at(i).is_op("{") && !at(i).is_op(";") && i < limit)
                ++i;
        }
        if (at(i).is_kw("default")) {
            // Annotation element default value.
            while (!at(i).is_op(";") && i < limit)
                ++i;
        }
        if (at(i).is_op("{")) {
            std::size_t end = match_brace(i);
            d.body = std::make_pair(i + 1, end);
            m.lines = at(end).line - mods.first_line + 1;
            i = end + 1;
        } else if (at(i).is_op(";")) {
            m.is_abstract = mods.is_abstract || (in_interface && !mods.is_static && !mods.is_default &&
                                                 vis != Visibility::Private);
            m.lines = at(i).line - mods.first_line + 1;
            ++i;
        } else {
            fail(at(i).line, {"{", ";"});
        }
        d.info_index = c.info.methods.size();
        c.info.methods.push_back(std::move(m));
        c.methods.push_back(std::move(d));
        return i;
    }

    std::size_t parse_fields(ClassDecl &c, std::size_t i, const std::string &type, Visibility vis,
                             const Modifiers &mods, bool in_interface, std::size_t limit)
    {
        for (;;) {
            if (!at(i).is_ident())
                fail(at(i).line, {"field name"});
            AttributeInfo a;
            a.name = at(i).text;
            a.declared_type = type;
            a.visibility = vis;
            a.is_static = mods.is_static || in_interface;
            ++i;
            while (at(i).is_op("[") && at(i + 1).is_op("]")) {
                a.declared_type += "[]";
                i += 2;
            }
            if (at(i).is_op("=")) {
                ++c.info.initializer_statements;
                ++i;
                while (i < limit && !at(i).is_op(",") && !at(i).is_op(";")) {
                    if (at(i).is_op("(") || at(i).is_op("["))
                        i = match(i, limit) + 1;
                    else if (at(i).is_op("{"))
                        i = match_brace(i) + 1;
                    else if (at(i).is_kw("new")) {
                        auto ty = parse_type(i + 1);
                        i = ty ? ty->first : i + 1;
                    } else
                        ++i;
                }
            }
            c.fields[a.name] = a.declared_type;
            c.info.attributes.push_back(std::move(a));
            if (at(i).is_op(",")) {
                ++i;
                continue;
            }
            if (at(i).is_op(";"))
                return i + 1;
            fail(at(i).line, {",", ";"});
        }
    }

    std::string path_;
    FileIndex &index_;
};

// ---------------------------------------------------------------------------
// Method bodies

class BodyParser : public TokenCursor {
public:
    BodyParser(std::span<const Token> toks, const FileIndex *index, const ClassDecl *cls)
        : TokenCursor(toks), index_(index), cls_(cls)
    {
        scopes_.emplace_back();
    }

    void bind(const std::string &name, const std::string &type) { scopes_.back()[name] = type; }

    std::vector<Stmt> parse_range(std::size_t b, std::size_t e)
    {
        std::vector<Stmt> out;
        std::size_t i = b;
        while (i < e) {
            std::size_t before = i;
            out.push_back(statement(i, e));
            if (i == before)
                ++i;
        }
        return out;
    }

    std::vector<Invocation> invocations;
    std::set<std::string> accesses;

private:
    // -- scopes ------------------------------------------------------------

    std::optional<std::string> local(const std::string &name) const
    {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto f = it->find(name);
            if (f != it->end())
                return f->second;
        }
        return std::nullopt;
    }

    struct ScopeGuard {
        BodyParser &p;
        explicit ScopeGuard(BodyParser &bp) : p(bp) { p.scopes_.emplace_back(); }
        ~ScopeGuard() { p.scopes_.pop_back(); }
    };

    // -- recording ---------------------------------------------------------

    std::string current() const { return cls_ != nullptr ? cls_->info.name : std::string("?"); }

    std::string normalize(const std::string &type) const
    {
        if (type.empty() || type == "?")
            return "?";
        if (index_ != nullptr) {
            if (const ClassDecl *d = index_->find(type, cls_))
                return d->info.name;
        }
        return erase_type(type);
    }

    void record_call(const std::string &receiver, const std::string &method, const std::vector<std::string> &args)
    {
        Invocation inv;
        inv.target_class = receiver.empty() ? "?" : receiver;
        inv.method = method;
        inv.argument_types = args;
        for (auto &existing : invocations) {
            if (existing.target_class == inv.target_class && existing.method == inv.method &&
                existing.argument_types == inv.argument_types) {
                ++existing.multiplicity;
                ++calls_;
                return;
            }
        }
        invocations.push_back(std::move(inv));
        ++calls_;
    }

    void record_access(const std::string &owner, const std::string &attr)
    {
        if (owner.empty() || owner == "?" || is_primitive_type(owner) || is_array(owner))
            return;
        accesses.insert(owner + "." + attr);
    }

    std::optional<std::string> field_type_of(const std::string &type, const std::string &name) const
    {
        if (index_ == nullptr)
            return std::nullopt;
        const ClassDecl *d = index_->find(type, cls_);
        if (d == nullptr)
            return std::nullopt;
        return index_->field_type(d, name);
    }

    std::string return_type_of(const std::string &type, const std::string &method, std::size_t arity) const
    {
        if (index_ == nullptr)
            return "?";
        const ClassDecl *d = index_->find(type, cls_);
        if (d == nullptr)
            return "?";
        std::string r = index_->return_type(d, method, arity);
        return r == "?" ? r : normalize_keep_array(r);
    }

    std::string normalize_keep_array(const std::string &type) const
    {
        std::string base = normalize(type);
        std::size_t dims = 0;
        for (std::size_t p = type.find("[]"); p != std::string::npos; p = type.find("[]", p + 2))
            ++dims;
        for (std::size_t k = 0; k < dims; ++k)
            base += "[]";
        return base;
    }

    std::string superclass_name() const
    {
        if (cls_ == nullptr || cls_->info.superclasses.empty() || cls_->info.kind == ClassKind::Interface)
            return "?";
        return normalize(cls_->info.superclasses.front());
    }

    // -- expressions ---------------------------------------------------------

    static std::string literal_type(const Token &t)
    {
        switch (t.kind) {
        case TokenKind::IntLiteral:
            return (t.text.back() == 'l' || t.text.back() == 'L') ? "long" : "int";
        case TokenKind::FloatLiteral:
            return (t.text.back() == 'f' || t.text.back() == 'F') ? "float" : "double";
        case TokenKind::StringLiteral:
            return "String";
        case TokenKind::CharLiteral:
            return "char";
        default:
            break;
        }
        if (t.is_kw("true") || t.is_kw("false"))
            return "boolean";
        return "?";
    }

    bool starts_primary(std::size_t i) const
    {
        const Token &t = at(i);
        return t.is_ident() || t.is_literal() || t.is_kw("this") || t.is_kw("super") || t.is_kw("new") ||
               t.is_op("(");
    }

    bool wildcard(std::size_t i) const
    {
        return at(i - 1).is_op("<") || at(i + 1).is_op(">") || at(i + 1).is_op(",") ||
               at(i + 1).is_kw("extends") || at(i + 1).is_kw("super");
    }

    ExprInfo analyze(std::size_t b, std::size_t e, bool count = true, std::string *type = nullptr)
    {
        ExprInfo info;
        const int calls_before = calls_;
        int primaries = 0;
        bool other = false;
        std::string last = "?";
        std::size_t pushed = 0;
        std::size_t i = b;
        while (i < e) {
            const Token &t = at(i);
            if (t.is_op("&&") || t.is_op("||")) {
                info.decisions += count ? 1 : 0;
                other = true;
                ++i;
            } else if (t.is_op("?") && !wildcard(i)) {
                info.decisions += count ? 1 : 0;
                other = true;
                ++i;
            } else if (t.is_op("{")) {
                std::size_t c = match(i, e);
                analyze(i + 1, c, false);
                other = true;
                i = c + 1;
            } else if (t.is_kw("instanceof")) {
                other = true;
                std::size_t k = i + 1;
                if (at(k).is_kw("final"))
                    ++k;
                auto ty = parse_type(k);
                if (ty) {
                    i = ty->first;
                    if (i < e && at(i).is_ident()) {
                        bind(at(i).text, normalize(ty->second));
                        ++i;
                    }
                } else {
                    ++i;
                }
            } else if (t.is_kw("switch")) {
                // Switch expression: arms are opaque, calls still count.
                other = true;
                std::size_t k = i + 1;
                if (at(k).is_op("(")) {
                    std::size_t c = match(k, e);
                    analyze(k + 1, c, count);
                    k = c + 1;
                }
                if (at(k).is_op("{")) {
                    std::size_t c = match(k, e);
                    analyze(k + 1, c, false);
                    k = c + 1;
                }
                i = k;
            } else if (lambda_params(i, e, pushed)) {
                other = true;
                i = lambda_end_;
            } else if (starts_primary(i)) {
                auto [next, ty] = primary(i, e, count);
                ++primaries;
                last = ty;
                i = next > i ? next : i + 1;
            } else {
                other = true;
                ++i;
            }
        }
        for (std::size_t k = 0; k < pushed; ++k)
            scopes_.pop_back();
        info.has_call = calls_ > calls_before;
        if (type != nullptr)
            *type = (primaries == 1 && !other) ? last : "?";
        return info;
    }

    // Lambda parameter lists "x ->" and "(a, b) ->" bind names locally.
    bool lambda_params(std::size_t i, std::size_t e, std::size_t &pushed)
    {
        const Token &t = at(i);
        if (t.is_ident() && at(i + 1).is_op("->")) {
            scopes_.emplace_back();
            ++pushed;
            bind(t.text, "?");
            lambda_end_ = i + 2;
            return true;
        }
        if (t.is_op("(")) {
            std::size_t c = match(i, e);
            if (c < e && at(c + 1).is_op("->")) {
                scopes_.emplace_back();
                ++pushed;
                for (std::size_t k = i + 1; k < c; ++k) {
                    if (at(k).is_ident() && (at(k + 1).is_op(",") || k + 1 == c))
                        bind(at(k).text, "?");
                }
                lambda_end_ = c + 2;
                return true;
            }
        }
        return false;
    }

    std::vector<std::string> arguments(std::size_t open, std::size_t close, bool count)
    {
        std::vector<std::string> out;
        if (close <= open + 1)
            return out;
        std::size_t start = open + 1;
        int depth = 0;
        for (std::size_t k = open + 1; k <= close; ++k) {
            const Token &t = at(k);
            if (k < close && (t.is_op("(") || t.is_op("[") || t.is_op("{")))
                ++depth;
            else if (k < close && (t.is_op(")") || t.is_op("]") || t.is_op("}")))
                --depth;
            else if (k < close && t.is_kw("new")) {
                // Skip generic arguments so their commas do not split.
                auto ty = parse_type(k + 1);
                if (ty && ty->first <= close)
                    k = ty->first - 1;
            }
            if (k == close || (depth == 0 && t.is_op(","))) {
                std::string ty;
                analyze(start, k, count, &ty);
                out.push_back(ty.empty() ? "?" : erase_type(ty) == ty ? ty : ty);
                start = k + 1;
            }
        }
        for (auto &a : out) {
            if (a != "?")
                a = erase_type(a) + (is_array(a) ? "[]" : "");
        }
        return out;
    }

    bool is_cast(std::size_t open, std::size_t close) const
    {
        auto ty = parse_type(open + 1);
        if (!ty || ty->first != close)
            return false;
        if (is_primitive_type(ty->second) || is_primitive_type(erase_type(ty->second)))
            return true;
        const Token &n = at(close + 1);
        return n.is_ident() || n.is_literal() || n.is_kw("this") || n.is_kw("super") || n.is_kw("new") ||
               n.is_op("(") || n.is_op("!") || n.is_op("~");
    }

    std::pair<std::size_t, std::string> primary(std::size_t i, std::size_t e, bool count)
    {
        std::string ty = "?";
        const Token &t = at(i);
        const std::string cur = current();
        if (t.is_literal()) {
            ty = literal_type(t);
            ++i;
        } else if (t.is_kw("this")) {
            ++i;
            if (at(i).is_op("(")) {
                std::size_t c = match(i, e);
                record_call(cur, simple_of(cur), arguments(i, c, count));
                return {c + 1, "?"};
            }
            ty = cur;
        } else if (t.is_kw("super")) {
            ++i;
            std::string sup = superclass_name();
            if (at(i).is_op("(")) {
                std::size_t c = match(i, e);
                auto args = arguments(i, c, count);
                if (sup != "?")
                    record_call(sup, simple_of(sup), args);
                return {c + 1, "?"};
            }
            ty = sup;
        } else if (t.is_kw("new")) {
            ++i;
            auto type = parse_type(i);
            if (!type)
                return {i, "?"};
            i = type->first;
            std::string name = normalize(type->second);
            if (at(i).is_op("<") && at(i + 1).is_op(">"))
                i += 2; // diamond
            if (at(i).is_op("[")) {
                while (at(i).is_op("[")) {
                    std::size_t c = match(i, e);
                    analyze(i + 1, c, count);
                    i = c + 1;
                    name += "[]";
                }
                if (at(i).is_op("{")) {
                    std::size_t c = match(i, e);
                    analyze(i + 1, c, count);
                    i = c + 1;
                }
                return {i, name};
            }
            if (is_array(type->second)) {
                if (at(i).is_op("{")) {
                    std::size_t c = match(i, e);
                    analyze(i + 1, c, count);
                    i = c + 1;
                }
                return {i, name};
            }
            if (at(i).is_op("(")) {
                std::size_t c = match(i, e);
                record_call(name, simple_of(name), arguments(i, c, count));
                i = c + 1;
            }
            if (at(i).is_op("{"))
                i = match(i, e) + 1; // anonymous class body
            ty = name;
        } else if (t.is_op("(")) {
            std::size_t c = match(i, e);
            if (is_cast(i, c)) {
                std::string cast = normalize_keep_array(parse_type(i + 1)->second);
                if (starts_primary(c + 1)) {
                    auto [next, _] = primary(c + 1, e, count);
                    return {next, cast};
                }
                return {c + 1, cast};
            }
            std::string inner;
            analyze(i + 1, c, count, &inner);
            ty = inner;
            i = c + 1;
        } else if (t.is_ident()) {
            const std::string name = t.text;
            if (at(i + 1).is_op("(")) {
                std::size_t c = match(i + 1, e);
                auto args = arguments(i + 1, c, count);
                record_call(cur, name, args);
                ty = return_type_of(cur, name, args.size());
                i = c + 1;
            } else if (auto l = local(name)) {
                ty = *l;
                ++i;
            } else if (const ClassDecl *owner = index_ != nullptr ? index_->field_owner(cls_, name) : nullptr) {
                record_access(owner->info.name, name);
                ty = normalize_keep_array(index_->field_type(owner, name).value_or("?"));
                ++i;
            } else if (at(i + 1).is_op(".") && at(i + 2).is_ident()) {
                if (starts_upper(name)) {
                    ty = normalize(name);
                    ++i;
                } else {
                    // Possibly a package path: a.b.C
                    std::size_t k = i;
                    std::string path = name;
                    while (at(k + 1).is_op(".") && at(k + 2).is_ident() && !starts_upper(at(k).text)) {
                        path += "." + at(k + 2).text;
                        k += 2;
                    }
                    if (starts_upper(at(k).text) && k > i && !at(k + 1).is_op("(")) {
                        ty = path;
                        i = k + 1;
                    } else {
                        // Unknown lowercase name: an inherited field perhaps.
                        record_access(cur, name);
                        ++i;
                    }
                }
            } else {
                record_access(cur, name);
                ++i;
            }
        } else {
            return {i + 1, "?"};
        }

        // Member selections, calls and indexing.
        while (i < e) {
            if (at(i).is_op(".")) {
                std::size_t k = i + 1;
                if (at(k).is_op("<")) {
                    std::size_t after = skip_generic_args(k);
                    if (after == std::string::npos)
                        break;
                    k = after;
                }
                const Token &n = at(k);
                if (n.is_ident() && at(k + 1).is_op("(")) {
                    std::size_t c = match(k + 1, e);
                    auto args = arguments(k + 1, c, count);
                    record_call(ty, n.text, args);
                    ty = ty == "?" ? "?" : return_type_of(ty, n.text, args.size());
                    i = c + 1;
                    continue;
                }
                if (n.is_ident()) {
                    if (ty != "?" && !is_array(ty) && !is_primitive_type(ty)) {
                        record_access(ty, n.text);
                        auto ft = field_type_of(ty, n.text);
                        ty = ft ? normalize_keep_array(*ft) : "?";
                    } else {
                        ty = "?";
                    }
                    i = k + 1;
                    continue;
                }
                if (n.is_kw("class")) {
                    ty = "Class";
                    i = k + 1;
                    continue;
                }
                if (n.is_kw("this")) {
                    i = k + 1;
                    continue;
                }
                if (n.is_kw("new")) {
                    auto [next, inner] = primary(k, e, count);
                    ty = inner;
                    i = next;
                    continue;
                }
                break;
            }
            if (at(i).is_op("[")) {
                std::size_t c = match(i, e);
                analyze(i + 1, c, count);
                ty = strip_array(ty);
                i = c + 1;
                continue;
            }
            if (at(i).is_op("::")) {
                i += 2;
                ty = "?";
                continue;
            }
            break;
        }
        return {i, ty};
    }

    // -- statements ---------------------------------------------------------

    // End of a simple statement: the ";" at bracket depth zero, or e.
    std::size_t statement_end(std::size_t i, std::size_t e) const
    {
        int depth = 0;
        for (std::size_t k = i; k < e; ++k) {
            const Token &t = at(k);
            if (t.is_op("(") || t.is_op("[") || t.is_op("{"))
                ++depth;
            else if (t.is_op(")") || t.is_op("]") || t.is_op("}"))
                --depth;
            else if (depth == 0 && t.is_op(";"))
                return k;
        }
        return e;
    }

    // Local variable declaration header: [final] Type name (= | ; | , | [ | :)
    std::optional<std::pair<std::size_t, std::string>> declaration_header(std::size_t i) const
    {
        while (at(i).is_kw("final") || (at(i).is_op("@") && !at(i + 1).is_kw("interface")))
            i = at(i).is_op("@") ? skip_annotation(i) : i + 1;
        auto ty = parse_type(i);
        if (!ty)
            return std::nullopt;
        const Token &name = at(ty->first);
        const Token &after = at(ty->first + 1);
        if (!name.is_ident())
            return std::nullopt;
        if (after.is_op("=") || after.is_op(";") || after.is_op(",") || after.is_op("[") || after.is_op(":"))
            return ty;
        return std::nullopt;
    }

    // Declarators from i (first name) to e; binds names, returns the merged
    // initializer info and whether any declarator has an initializer.
    ExprInfo declarators(std::size_t i, std::size_t e, const std::string &type, bool &initialized)
    {
        ExprInfo info;
        initialized = false;
        while (i < e) {
            if (!at(i).is_ident())
                break;
            std::string name = at(i).text;
            std::string t = type;
            ++i;
            while (at(i).is_op("[") && at(i + 1).is_op("]")) {
                t += "[]";
                i += 2;
            }
            if (at(i).is_op("=")) {
                initialized = true;
                std::size_t start = i + 1;
                std::size_t k = start;
                int depth = 0;
                for (; k < e; ++k) {
                    const Token &tk = at(k);
                    if (tk.is_op("(") || tk.is_op("[") || tk.is_op("{"))
                        ++depth;
                    else if (tk.is_op(")") || tk.is_op("]") || tk.is_op("}"))
                        --depth;
                    else if (tk.is_kw("new")) {
                        auto ty = parse_type(k + 1);
                        if (ty && ty->first <= e)
                            k = ty->first - 1;
                    } else if (depth == 0 && tk.is_op(","))
                        break;
                }
                std::string init_type;
                ExprInfo part = analyze(start, k, true, &init_type);
                info.decisions += part.decisions;
                info.has_call = info.has_call || part.has_call;
                if (erase_type(t) == "var")
                    t = init_type;
                i = k;
            }
            bind(name, erase_type(t) == "var" ? "?" : normalize_keep_array(t));
            if (at(i).is_op(","))
                ++i;
            else
                break;
        }
        return info;
    }

    std::vector<Stmt> sub_statement(std::size_t &i, std::size_t e)
    {
        ScopeGuard g(*this);
        std::vector<Stmt> out;
        if (i < e)
            out.push_back(statement(i, e));
        return out;
    }

    // Parenthesized header "( ... )" at i; returns the closing index.
    std::size_t paren(std::size_t i, std::size_t e) const { return at(i).is_op("(") ? match(i, e) : i; }

    Stmt statement(std::size_t &i, std::size_t e)
    {
        using K = Stmt::Kind;
        Stmt s;
        const Token &t = at(i);
        s.line = t.line;

        if (t.is_op("{")) {
            std::size_t c = match(i, e);
            s.kind = K::Block;
            ScopeGuard g(*this);
            s.body = parse_range(i + 1, c);
            i = c + 1;
            return s;
        }
        if (t.is_op(";")) {
            s.kind = K::Empty;
            ++i;
            return s;
        }
        if (t.is_kw("if")) {
            s.kind = K::If;
            s.counted = true;
            std::size_t c = paren(i + 1, e);
            s.expr = analyze(i + 2, c);
            i = c + 1;
            s.body = sub_statement(i, e);
            if (at(i).is_kw("else")) {
                ++i;
                s.else_body = sub_statement(i, e);
            }
            return s;
        }
        if (t.is_kw("while")) {
            s.kind = K::While;
            s.counted = true;
            std::size_t c = paren(i + 1, e);
            s.expr = analyze(i + 2, c);
            i = c + 1;
            s.body = sub_statement(i, e);
            return s;
        }
        if (t.is_kw("do")) {
            s.kind = K::Do;
            s.counted = true;
            ++i;
            s.body = sub_statement(i, e);
            if (at(i).is_kw("while")) {
                std::size_t c = paren(i + 1, e);
                s.expr = analyze(i + 2, c);
                i = c + 1;
            }
            if (at(i).is_op(";"))
                ++i;
            return s;
        }
        if (t.is_kw("for"))
            return for_statement(i, e);
        if (t.is_kw("switch") && at(i + 1).is_op("("))
            return switch_statement(i, e);
        if (t.is_kw("try"))
            return try_statement(i, e);
        if (t.is_kw("return") || t.is_kw("throw")) {
            s.kind = t.is_kw("return") ? K::Return : K::Throw;
            s.counted = true;
            std::size_t end = statement_end(i + 1, e);
            s.expr = analyze(i + 1, end);
            i = end + 1;
            return s;
        }
        if (t.is_kw("break") || t.is_kw("continue")) {
            s.kind = t.is_kw("break") ? K::Break : K::Continue;
            s.counted = true;
            ++i;
            if (at(i).is_ident()) {
                s.label = at(i).text;
                ++i;
            }
            if (at(i).is_op(";"))
                ++i;
            return s;
        }
        if (t.is_kw("synchronized") && at(i + 1).is_op("(")) {
            s.kind = K::Sync;
            s.counted = true;
            std::size_t c = paren(i + 1, e);
            s.expr = analyze(i + 2, c);
            i = c + 1;
            s.body = sub_statement(i, e);
            return s;
        }
        if (t.is_ident() && at(i + 1).is_op(":")) {
            s.kind = K::Labeled;
            s.label = t.text;
            i += 2;
            if (i < e)
                s.body.push_back(statement(i, e));
            return s;
        }
        if (local_type_declaration(i)) {
            // Local classes are skipped; their members are not this method's.
            s.kind = K::Opaque;
            std::size_t k = i;
            while (k < e && !at(k).is_op("{"))
                ++k;
            i = k < e ? match(k, e) + 1 : e;
            return s;
        }
        if (auto header = declaration_header(i)) {
            s.kind = K::Decl;
            std::size_t end = statement_end(header->first, e);
            bool initialized = false;
            s.expr = declarators(header->first, end, header->second, initialized);
            s.counted = initialized;
            i = end + 1;
            return s;
        }
        if (t.kind == TokenKind::Keyword && !t.is_kw("this") && !t.is_kw("super") && !t.is_kw("new") &&
            !t.is_literal() && !t.is_kw("assert") && !t.is_kw("switch") &&
            !(t.kind == TokenKind::Keyword && is_primitive_type(t.text))) {
            // Stray keyword (e.g. a dangling else): degrade.
            s.kind = K::Opaque;
            ++i;
            return s;
        }
        std::size_t start = t.is_kw("assert") ? i + 1 : i;
        if (t.is_ident() && t.text == "yield" && !at(i + 1).is_op("=") && !at(i + 1).is_op("(") &&
            !at(i + 1).is_op("."))
            start = i + 1;
        std::size_t end = statement_end(i, e);
        s.kind = end < e ? K::Expr : K::Opaque;
        s.counted = end < e;
        s.expr = analyze(start, end);
        i = end < e ? end + 1 : e;
        return s;
    }

    bool local_type_declaration(std::size_t i) const
    {
        while (at(i).is_kw("final") || at(i).is_kw("abstract") || at(i).is_kw("static") ||
               (at(i).is_op("@") && !at(i + 1).is_kw("interface")))
            i = at(i).is_op("@") ? skip_annotation(i) : i + 1;
        const Token &t = at(i);
        return t.is_kw("class") || t.is_kw("interface") || (t.is_kw("enum") && at(i + 1).is_ident()) ||
               (t.is_ident() && t.text == "record" && at(i + 1).is_ident() &&
                (at(i + 2).is_op("(") || at(i + 2).is_op("<")));
    }

    Stmt for_statement(std::size_t &i, std::size_t e)
    {
        using K = Stmt::Kind;
        Stmt s;
        s.line = at(i).line;
        s.counted = true;
        ScopeGuard g(*this);
        std::size_t open = i + 1;
        std::size_t close = paren(open, e);

        // Enhanced for: header "Type name : expr".
        if (auto header = declaration_header(open + 1); header && at(header->first + 1).is_op(":")) {
            s.kind = K::ForEach;
            s.expr = analyze(header->first + 2, close);
            std::string elem = header->second;
            bind(at(header->first).text, erase_type(elem) == "var" ? "?" : normalize_keep_array(elem));
            i = close + 1;
            s.body = sub_statement(i, e);
            return s;
        }

        s.kind = K::For;
        // Split the header on top-level semicolons.
        std::vector<std::size_t> semis;
        int depth = 0;
        for (std::size_t k = open + 1; k < close; ++k) {
            const Token &t = at(k);
            if (t.is_op("(") || t.is_op("[") || t.is_op("{"))
                ++depth;
            else if (t.is_op(")") || t.is_op("]") || t.is_op("}"))
                --depth;
            else if (depth == 0 && t.is_op(";"))
                semis.push_back(k);
        }
        if (semis.size() != 2) {
            s.kind = K::Opaque;
            s.expr = analyze(open + 1, close);
            i = close + 1;
            s.body = sub_statement(i, e);
            return s;
        }
        auto split_expressions = [&](std::size_t b, std::size_t en) {
            std::vector<Stmt> out;
            std::size_t start = b;
            int d = 0;
            for (std::size_t k = b; k <= en; ++k) {
                const Token &t = at(k);
                if (k < en && (t.is_op("(") || t.is_op("[") || t.is_op("{")))
                    ++d;
                else if (k < en && (t.is_op(")") || t.is_op("]") || t.is_op("}")))
                    --d;
                if (k == en || (d == 0 && t.is_op(","))) {
                    if (k > start) {
                        Stmt x;
                        x.kind = K::Expr;
                        x.line = at(start).line;
                        x.expr = analyze(start, k);
                        out.push_back(std::move(x));
                    }
                    start = k + 1;
                }
            }
            return out;
        };
        if (auto header = declaration_header(open + 1)) {
            Stmt d;
            d.kind = K::Decl;
            d.line = at(open + 1).line;
            bool initialized = false;
            d.expr = declarators(header->first, semis[0], header->second, initialized);
            s.init.push_back(std::move(d));
        } else {
            s.init = split_expressions(open + 1, semis[0]);
        }
        s.expr = analyze(semis[0] + 1, semis[1]);
        s.update = split_expressions(semis[1] + 1, close);
        i = close + 1;
        s.body = sub_statement(i, e);
        return s;
    }

    Stmt switch_statement(std::size_t &i, std::size_t e)
    {
        using K = Stmt::Kind;
        Stmt s;
        s.kind = K::Switch;
        s.line = at(i).line;
        s.counted = true;
        std::size_t c = paren(i + 1, e);
        s.expr = analyze(i + 2, c);
        i = c + 1;
        if (!at(i).is_op("{"))
            return s;
        std::size_t close = match(i, e);
        ScopeGuard g(*this);
        std::size_t k = i + 1;
        while (k < close) {
            const Token &t = at(k);
            if (!t.is_kw("case") && !t.is_kw("default")) {
                // Statements before any label: attach to a label-less case.
                if (s.cases.empty())
                    s.cases.emplace_back();
                std::size_t before = k;
                s.cases.back().body.push_back(statement(k, close));
                if (k == before)
                    ++k;
                continue;
            }
            Stmt::Case cs;
            std::size_t label_end = k + 1;
            int depth = 0;
            int commas = 0;
            for (; label_end < close; ++label_end) {
                const Token &lt = at(label_end);
                if (lt.is_op("(") || lt.is_op("[") || lt.is_op("{"))
                    ++depth;
                else if (lt.is_op(")") || lt.is_op("]") || lt.is_op("}"))
                    --depth;
                else if (depth == 0 && (lt.is_op(":") || lt.is_op("->")))
                    break;
                else if (depth == 0 && lt.is_op(","))
                    ++commas;
            }
            if (t.is_kw("default")) {
                cs.is_default = true;
            } else if (at(k + 1).is_kw("default")) {
                cs.is_default = true; // "case null, default"
                cs.labels = commas;
            } else {
                cs.labels = commas + 1;
            }
            bool arrow = at(label_end).is_op("->");
            k = label_end + 1;
            if (arrow) {
                ScopeGuard arm(*this);
                if (k < close)
                    cs.body.push_back(statement(k, close));
                Stmt brk;
                brk.kind = K::Break;
                brk.line = at(k - 1).line;
                cs.body.push_back(std::move(brk));
            } else {
                while (k < close && !at(k).is_kw("case") && !at(k).is_kw("default")) {
                    std::size_t before = k;
                    cs.body.push_back(statement(k, close));
                    if (k == before)
                        ++k;
                }
            }
            // Consecutive labels sharing one body become one case.
            if (!s.cases.empty() && s.cases.back().body.empty() && !arrow) {
                s.cases.back().labels += cs.labels;
                s.cases.back().is_default = s.cases.back().is_default || cs.is_default;
                s.cases.back().body = std::move(cs.body);
            } else {
                s.cases.push_back(std::move(cs));
            }
        }
        i = close + 1;
        return s;
    }

    Stmt try_statement(std::size_t &i, std::size_t e)
    {
        using K = Stmt::Kind;
        Stmt s;
        s.kind = K::Try;
        s.line = at(i).line;
        s.counted = true;
        ++i;
        ScopeGuard g(*this);
        if (at(i).is_op("(")) {
            std::size_t c = match(i, e);
            std::size_t k = i + 1;
            while (k < c) {
                std::size_t end = k;
                int depth = 0;
                for (; end < c; ++end) {
                    const Token &t = at(end);
                    if (t.is_op("(") || t.is_op("[") || t.is_op("{"))
                        ++depth;
                    else if (t.is_op(")") || t.is_op("]") || t.is_op("}"))
                        --depth;
                    else if (depth == 0 && t.is_op(";"))
                        break;
                }
                ExprInfo part;
                if (auto header = declaration_header(k)) {
                    bool initialized = false;
                    part = declarators(header->first, end, header->second, initialized);
                } else {
                    part = analyze(k, end);
                }
                s.expr.decisions += part.decisions;
                s.expr.has_call = s.expr.has_call || part.has_call;
                k = end + 1;
            }
            i = c + 1;
        }
        if (at(i).is_op("{")) {
            std::size_t c = match(i, e);
            ScopeGuard body(*this);
            s.body = parse_range(i + 1, c);
            i = c + 1;
        }
        while (at(i).is_kw("catch")) {
            ScopeGuard handler(*this);
            std::size_t c = paren(i + 1, e);
            // catch (final A | B name)
            std::string first_type;
            std::size_t k = i + 2;
            while (at(k).is_kw("final") || at(k).is_op("@"))
                k = at(k).is_op("@") ? skip_annotation(k) : k + 1;
            if (auto ty = parse_type(k))
                first_type = ty->second;
            if (c > i + 2 && at(c - 1).is_ident())
                bind(at(c - 1).text, normalize(first_type));
            i = c + 1;
            std::vector<Stmt> body;
            if (at(i).is_op("{")) {
                std::size_t close = match(i, e);
                body = parse_range(i + 1, close);
                i = close + 1;
            }
            s.catches.push_back(std::move(body));
        }
        if (at(i).is_kw("finally")) {
            ++i;
            if (at(i).is_op("{")) {
                std::size_t close = match(i, e);
                ScopeGuard fin(*this);
                s.finally_body = parse_range(i + 1, close);
                i = close + 1;
            } else {
                s.finally_body = std::vector<Stmt>{};
            }
        }
        return s;
    }

    const FileIndex *index_;
    const ClassDecl *cls_;
    std::vector<std::map<std::string, std::string>> scopes_;
    int calls_ = 0;
    std::size_t lambda_end_ = 0;
};

void check_body_braces(std::span<const Token> toks)
{
    int depth = 0;
    int first_line = toks.empty() ? 0 : toks.front().line;
    std::vector<int> open_lines;
    for (const auto &t : toks) {
        if (t.is_op("{")) {
            open_lines.push_back(t.line);
            ++depth;
        } else if (t.is_op("}")) {
            if (--depth < 0)
                throw UnbalancedBlock(t.line);
            open_lines.pop_back();
        }
    }
    if (depth != 0)
        throw UnbalancedBlock(open_lines.empty() ? first_line : open_lines.back());
}

} // namespace

std::vector<Stmt> parse_body(std::span<const Token> body_tokens)
{
    // Drop a trailing end-of-file marker if the caller passed one.
    if (!body_tokens.empty() && body_tokens.back().kind == TokenKind::EndOfFile)
        body_tokens = body_tokens.first(body_tokens.size() - 1);
    check_body_braces(body_tokens);
    BodyParser p(body_tokens, nullptr, nullptr);
    return p.parse_range(0, body_tokens.size());
}

CompilationFacts parse_source(std::string_view text, std::string_view path)
{
    validate_utf8(text, path);
    std::vector<Token> tokens = tokenize(text, path);
    LineScan lines = scan_lines(text);

    FileIndex index;
    DeclParser decls(tokens, std::string(path), index);
    decls.parse_unit();

    CompilationFacts facts;
    facts.path = std::string(path);
    facts.package = decls.package;

    const bool single_top_level = decls.top_level_types == 1;
    std::vector<bool> code_line(lines.line_count() + 2, false);
    for (const auto &t : tokens)
        if (t.kind != TokenKind::EndOfFile && t.line < static_cast<int>(code_line.size()))
            code_line[t.line] = true;
    for (auto &decl : index.classes) {
        ClassDecl &c = *decl;
        std::span<const Token> all(tokens);

        for (auto &md : c.methods) {
            MethodInfo &m = c.info.methods[md.info_index];
            if (!md.body)
                continue;
            auto [b, e] = *md.body;
            std::span<const Token> body = all.subspan(b, e - b);
            BodyParser bp(all.first(e), &index, &c);
            for (const auto &[name, type] : md.params)
                bp.bind(name, type);
            std::vector<Stmt> stmts = bp.parse_range(b, e);
            m.cfg = build_cfg(stmts);
            m.statements = count_statements(stmts);
            m.halstead = halstead_counts(body);
            m.invocations = std::move(bp.invocations);
            m.accessed_attributes.assign(bp.accesses.begin(), bp.accesses.end());
            facts.methods.push_back({c.info.name, m.signature(), std::vector<Token>(body.begin(), body.end())});
        }
        for (const auto &method : c.info.methods) {
            if (method.cfg)
                continue;
            facts.methods.push_back({c.info.name, method.signature(), {}});
        }
        for (auto [b, e] : c.initializers) {
            BodyParser bp(all.first(e), &index, &c);
            c.info.initializer_statements += count_statements(bp.parse_range(b, e));
        }

        int first = c.first_line;
        int last = c.last_line;
        if (single_top_level && c.outer.empty()) {
            first = 1;
            last = lines.line_count();
        } else {
            // A comment block directly above the declaration belongs to it.
            while (first > 1 && !code_line[first - 1] && lines.has_comment[first - 2])
                --first;
        }
        c.info.line_count = std::max(0, last - first + 1);
        c.info.comment_lines = lines.comment_lines_between(first, last);
        facts.classes.push_back(c.info);
    }
    return facts;
}

std::vector<ClassInfo> ParsedSources::classes() const
{
    std::vector<ClassInfo> out;
    for (const auto &f : files)
        out.insert(out.end(), f.classes.begin(), f.classes.end());
    return out;
}

std::vector<std::filesystem::path> collect_sources(const std::vector<std::filesystem::path> &paths,
                                                   std::string_view extension)
{
    std::vector<std::filesystem::path> out;
    for (const auto &p : paths) {
        if (std::filesystem::is_directory(p)) {
            for (const auto &e : std::filesystem::recursive_directory_iterator(p)) {
                if (e.is_regular_file() && e.path().extension() == extension)
                    out.push_back(e.path());
            }
        } else if (std::filesystem::is_regular_file(p)) {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ParsedSources parse_files(const std::vector<std::filesystem::path> &files)
{
    ParsedSources out;
    for (const auto &f : files) {
        std::ifstream in(f, std::ios::binary);
        if (!in) {
            out.errors.push_back({f.string(), "cannot read file"});
            continue;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        try {
            out.files.push_back(parse_source(text, f.string()));
            out.texts.emplace_back(f.string(), std::move(text));
        } catch (const Error &e) {
            out.errors.push_back({f.string(), e.what()});
        }
    }
    return out;
}

} // namespace metriscope
