#include "cnaf/apx.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cnaf/errors.hpp"

namespace cnaf {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Splits text into lines, tolerating \n and \r\n endings.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

Af parse_tgf(const std::string& text) {
    Af af;
    bool in_edges = false;
    std::size_t offset = 0;
    for (const std::string& raw : split_lines(text)) {
        std::string line = trimmed(raw);
        std::size_t line_offset = offset;
        offset += raw.size() + 1;
        if (line.empty()) continue;
        if (line == "#") {
            if (in_edges) throw ParseError("second '#' separator", line_offset);
            in_edges = true;
            continue;
        }
        if (!in_edges) {
            if (!is_valid_atom_name(line))
                throw ParseError("bad node id '" + line + "'", line_offset);
            if (af.has_argument(line))
                throw ParseError("duplicate node id '" + line + "'", line_offset);
            af.arguments.push_back(line);
        } else {
            std::istringstream ss(line);
            std::string src, tgt, extra;
            if (!(ss >> src >> tgt) || (ss >> extra))
                throw ParseError("malformed edge line '" + line + "'", line_offset);
            if (!af.has_argument(src))
                throw ParseError("unknown edge endpoint '" + src + "'", line_offset);
            if (!af.has_argument(tgt))
                throw ParseError("unknown edge endpoint '" + tgt + "'", line_offset);
            af.attacks.emplace_back(src, tgt);
        }
    }
    if (af.arguments.empty()) throw ParseError("no nodes declared", 0);
    return af;
}

// ---------------------------------------------------------------------------
// Extended APX
// ---------------------------------------------------------------------------

namespace {

// A single parsed fact: functor plus raw argument fields. List-valued fields
// keep their brackets; quoted fields keep their quotes stripped.
struct Fact {
    std::string functor;
    std::vector<std::string> args;
    std::size_t offset;
};

class ApxScanner {
public:
    explicit ApxScanner(const std::string& text) : text_(text) {}

    std::vector<Fact> scan() {
        std::vector<Fact> facts;
        while (true) {
            skip_ws_and_comments();
            if (pos_ >= text_.size()) break;
            facts.push_back(fact());
        }
        return facts;
    }

private:
    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        if (pos_ == start)
            throw ParseError("expected a name", start);
        return text_.substr(start, pos_ - start);
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    // One field of a fact: name, [list], or "quoted".
    std::string field() {
        skip_ws_and_comments();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '[') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
            std::string body = text_.substr(start, pos_ - start);
            expect(']');
            return body;
        }
        if (c == '"') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
            std::string body = text_.substr(start, pos_ - start);
            expect('"');
            return body;
        }
        return name();
    }

    Fact fact() {
        Fact f;
        f.offset = pos_;
        f.functor = name();
        skip_ws_and_comments();
        expect('(');
        while (true) {
            f.args.push_back(field());
            skip_ws_and_comments();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        expect(')');
        skip_ws_and_comments();
        expect('.');
        return f;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

std::vector<std::string> parse_name_list(const std::string& bracketed,
                                         std::size_t offset) {
    // "[a, b, c]" -> {a, b, c}
    std::vector<std::string> out;
    std::string body = bracketed.substr(1); // drop '['
    std::string cur;
    auto flush = [&]() {
        std::string t = trimmed(cur);
        if (t.empty()) throw ParseError("empty list member", offset);
        out.push_back(t);
        cur.clear();
    };
    for (char c : body) {
        if (c == ',') flush();
        else cur.push_back(c);
    }
    if (!trimmed(cur).empty()) flush();
    if (out.empty()) throw ParseError("empty list", offset);
    return out;
}

void require_arity(const Fact& f, std::size_t n) {
    if (f.args.size() != n)
        throw ParseError(f.functor + "/" + std::to_string(f.args.size()) +
                             ": expected " + std::to_string(n) + " fields",
                         f.offset);
}

} // namespace

Framework parse_apx(const std::string& text) {
    std::vector<Fact> facts = ApxScanner(text).scan();

    bool has_att = false, has_jatt = false, has_higher = false;
    bool has_datt = false, has_supp = false, has_ac = false;
    for (const auto& f : facts) {
        if (f.functor == "att") has_att = true;
        else if (f.functor == "jatt") has_jatt = true;
        else if (f.functor == "natt" || f.functor == "hatt") has_higher = true;
        else if (f.functor == "datt") has_datt = true;
        else if (f.functor == "supp") has_supp = true;
        else if (f.functor == "ac") has_ac = true;
        else if (f.functor != "arg")
            throw ParseError("unknown fact '" + f.functor + "'", f.offset);
    }
    int families = int(has_jatt) + int(has_higher) + int(has_datt) +
                   int(has_supp) + int(has_ac);
    if (families > 1)
        throw ParseError("incompatible fact families mixed in one file", 0);
    if (has_higher && has_att)
        throw ParseError("att(...) facts cannot be mixed with natt/hatt; "
                         "level-1 attacks need ids",
                         0);
    if (has_ac && has_att)
        throw ParseError("att(...) facts cannot be mixed with ac(...)", 0);

    std::vector<std::string> arguments;
    auto declared = [&](const std::string& a) {
        return std::find(arguments.begin(), arguments.end(), a) != arguments.end();
    };
    auto need_arg = [&](const std::string& a, std::size_t offset) {
        if (!is_valid_atom_name(a))
            throw ParseError("bad argument name '" + a + "'", offset);
        if (!declared(a))
            throw ParseError("undeclared argument '" + a + "'", offset);
    };

    for (const auto& f : facts) {
        if (f.functor != "arg") continue;
        require_arity(f, 1);
        if (!is_valid_atom_name(f.args[0]))
            throw ParseError("bad argument name '" + f.args[0] + "'", f.offset);
        if (declared(f.args[0]))
            throw ParseError("duplicate arg(" + f.args[0] + ")", f.offset);
        arguments.push_back(f.args[0]);
    }
    if (arguments.empty()) throw ParseError("no arg(...) facts", 0);

    if (has_higher) {
        HigherAf haf;
        haf.arguments = arguments;
        std::set<std::string> ids;
        for (const auto& f : facts) {
            if (f.functor == "natt") {
                require_arity(f, 3);
                need_arg(f.args[1], f.offset);
                need_arg(f.args[2], f.offset);
                if (!is_valid_atom_name(f.args[0]) || declared(f.args[0]) ||
                    !ids.insert(f.args[0]).second)
                    throw ParseError("bad or duplicate attack id '" + f.args[0] + "'",
                                     f.offset);
                haf.attacks.push_back({f.args[0], f.args[1], f.args[2]});
            } else if (f.functor == "hatt") {
                require_arity(f, 3);
                need_arg(f.args[1], f.offset);
                if (!is_valid_atom_name(f.args[0]) || declared(f.args[0]) ||
                    !ids.insert(f.args[0]).second)
                    throw ParseError("bad or duplicate attack id '" + f.args[0] + "'",
                                     f.offset);
                haf.attacks.push_back({f.args[0], f.args[1], f.args[2]});
            }
        }
        // Targets of hatt facts must name attacks.
        for (const auto& a : haf.attacks) {
            if (!haf.has_argument(a.target) && !haf.find_attack(a.target))
                throw ParseError("dangling attack id '" + a.target + "'", 0);
        }
        return haf;
    }

    if (has_jatt) {
        JointAf jaf;
        jaf.arguments = arguments;
        for (const auto& f : facts) {
            if (f.functor == "att") {
                require_arity(f, 2);
                need_arg(f.args[0], f.offset);
                need_arg(f.args[1], f.offset);
                jaf.attacks.push_back({{f.args[0]}, f.args[1]});
            } else if (f.functor == "jatt") {
                require_arity(f, 2);
                std::vector<std::string> group = parse_name_list(f.args[0], f.offset);
                for (const auto& z : group) need_arg(z, f.offset);
                need_arg(f.args[1], f.offset);
                jaf.attacks.push_back({std::move(group), f.args[1]});
            }
        }
        return jaf;
    }

    if (has_datt) {
        DisjAf daf;
        daf.arguments = arguments;
        for (const auto& f : facts) {
            if (f.functor == "att") {
                require_arity(f, 2);
                need_arg(f.args[0], f.offset);
                need_arg(f.args[1], f.offset);
                daf.direct_attacks.emplace_back(f.args[0], f.args[1]);
            } else if (f.functor == "datt") {
                require_arity(f, 2);
                need_arg(f.args[0], f.offset);
                std::vector<std::string> targets = parse_name_list(f.args[1], f.offset);
                for (const auto& t : targets) need_arg(t, f.offset);
                daf.disj_attacks.push_back({f.args[0], std::move(targets)});
            }
        }
        return daf;
    }

    if (has_supp) {
        BipolarAf baf;
        baf.arguments = arguments;
        for (const auto& f : facts) {
            if (f.functor == "att" || f.functor == "supp") {
                require_arity(f, 2);
                need_arg(f.args[0], f.offset);
                need_arg(f.args[1], f.offset);
                if (f.functor == "att")
                    baf.attacks.emplace_back(f.args[0], f.args[1]);
                else
                    baf.supports.emplace_back(f.args[0], f.args[1]);
            }
        }
        return baf;
    }

    if (has_ac) {
        AdfSpec adf;
        adf.arguments = arguments;
        for (const auto& f : facts) {
            if (f.functor != "ac") continue;
            require_arity(f, 2);
            need_arg(f.args[0], f.offset);
            FormulaPtr phi;
            try {
                phi = parse_formula(f.args[1]);
            } catch (const ParseError& e) {
                throw ParseError("in ac(" + f.args[0] + ", ...): " + e.what(),
                                 f.offset);
            }
            adf.acceptance.emplace_back(f.args[0], std::move(phi));
        }
        std::vector<std::string> issues = validate(adf);
        if (!issues.empty()) throw ParseError(issues.front(), 0);
        return adf;
    }

    Af af;
    af.arguments = arguments;
    for (const auto& f : facts) {
        if (f.functor != "att") continue;
        require_arity(f, 2);
        need_arg(f.args[0], f.offset);
        need_arg(f.args[1], f.offset);
        af.attacks.emplace_back(f.args[0], f.args[1]);
    }
    return af;
}

// ---------------------------------------------------------------------------
// Printers
// ---------------------------------------------------------------------------

namespace {

std::string arg_lines(const std::vector<std::string>& arguments) {
    std::string out;
    for (const auto& a : arguments) out += "arg(" + a + ").\n";
    return out;
}

std::string name_list(const std::vector<std::string>& names) {
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ",";
        out += names[i];
    }
    return out + "]";
}

} // namespace

std::string print_tgf(const Af& af) {
    std::string out;
    for (const auto& a : af.arguments) out += a + "\n";
    out += "#\n";
    for (const auto& [src, tgt] : af.attacks) out += src + " " + tgt + "\n";
    return out;
}

std::string print_apx(const Af& af) {
    std::string out = arg_lines(af.arguments);
    for (const auto& [src, tgt] : af.attacks)
        out += "att(" + src + "," + tgt + ").\n";
    return out;
}

std::string print_apx(const JointAf& jaf) {
    std::string out = arg_lines(jaf.arguments);
    for (const auto& a : jaf.attacks)
        out += "jatt(" + name_list(a.group) + "," + a.target + ").\n";
    return out;
}

std::string print_apx(const HigherAf& haf) {
    std::string out = arg_lines(haf.arguments);
    for (const auto& a : haf.attacks) {
        if (haf.has_argument(a.target))
            out += "natt(" + a.id + "," + a.source + "," + a.target + ").\n";
        else
            out += "hatt(" + a.id + "," + a.source + "," + a.target + ").\n";
    }
    return out;
}

std::string print_apx(const DisjAf& daf) {
    std::string out = arg_lines(daf.arguments);
    for (const auto& [src, tgt] : daf.direct_attacks)
        out += "att(" + src + "," + tgt + ").\n";
    for (const auto& a : daf.disj_attacks)
        out += "datt(" + a.source + "," + name_list(a.targets) + ").\n";
    return out;
}

std::string print_apx(const BipolarAf& baf) {
    std::string out = arg_lines(baf.arguments);
    for (const auto& [src, tgt] : baf.attacks)
        out += "att(" + src + "," + tgt + ").\n";
    for (const auto& [src, tgt] : baf.supports)
        out += "supp(" + src + "," + tgt + ").\n";
    return out;
}

std::string print_apx(const AdfSpec& adf) {
    std::string out = arg_lines(adf.arguments);
    for (const auto& [arg, phi] : adf.acceptance)
        out += "ac(" + arg + ",\"" + print(phi) + "\").\n";
    return out;
}

std::string print_apx(const Framework& fw) {
    return std::visit([](const auto& f) { return print_apx(f); }, fw);
}

} // namespace cnaf
