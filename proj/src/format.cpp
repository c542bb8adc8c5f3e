#include "matchcore/format.hpp"

#include <cctype>
#include <map>
#include <set>
#include <utility>

#include <json.hpp>

namespace matchcore {

namespace {

struct Token {
    enum Kind { Ident, At, Gt, Semi, LBrace, RBrace, End };

    Kind kind = End;
    std::string text;  // the lexeme (idents; punctuation as written)
    int line = 1;
    int col = 1;
};

std::string describe(const Token& tok) {
    if (tok.kind == Token::End) return "end of input";
    return "'" + tok.text + "'";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        skip_blank();
        Token tok;
        tok.line = line_;
        tok.col = col_;
        if (pos_ >= s_.size()) return tok;  // End

        const char c = s_[pos_];
        switch (c) {
            case '@': return punct(tok, Token::At);
            case '>': return punct(tok, Token::Gt);
            case ';': return punct(tok, Token::Semi);
            case '{': return punct(tok, Token::LBrace);
            case '}': return punct(tok, Token::RBrace);
            default: break;
        }
        if (!ident_start(c))
            throw SyntaxError(line_, col_, "a valid token", std::string("'") + c + "'");
        tok.kind = Token::Ident;
        while (pos_ < s_.size() && ident_char(s_[pos_])) {
            tok.text += s_[pos_];
            take();
        }
        return tok;
    }

private:
    void take() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') take();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                take();
            } else {
                break;
            }
        }
    }

    Token punct(Token tok, Token::Kind kind) {
        tok.kind = kind;
        tok.text = s_[pos_];
        take();
        return tok;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text), cur_(lex_.next()) {}

    ParsedMarket run() {
        expect_keyword("men");
        read_roster(result_.men_names, {"women", "pref"});
        expect_keyword("women");
        read_roster(result_.women_names, {"pref"});

        result_.market = Market(static_cast<int>(result_.men_names.size()),
                                static_cast<int>(result_.women_names.size()));
        index_names();

        std::vector<char> has_block(result_.market.size(), 0);
        while (cur_.kind == Token::Ident && cur_.text == "pref") {
            advance();
            read_pref_block(has_block);
        }
        if (cur_.kind != Token::End) fail("'pref' or end of input");

        for (int i = 0; i < result_.market.size(); ++i)
            if (!has_block[i]) throw MissingPrefBlock(original_name(result_.market.agent(i)));
        return std::move(result_);
    }

private:
    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        throw SyntaxError(cur_.line, cur_.col, expected, describe(cur_));
    }

    void expect_keyword(const std::string& kw) {
        if (cur_.kind != Token::Ident || cur_.text != kw) fail("'" + kw + "'");
        advance();
    }

    void read_roster(std::vector<std::string>& names, std::set<std::string> stops) {
        while (cur_.kind == Token::Ident && !stops.count(cur_.text)) {
            if (declared_.count(cur_.text)) throw DuplicateAgent(cur_.text);
            declared_.insert(cur_.text);
            names.push_back(cur_.text);
            advance();
        }
    }

    void index_names() {
        for (size_t i = 0; i < result_.men_names.size(); ++i)
            by_name_[result_.men_names[i]] = AgentId{Side::Man, static_cast<int>(i) + 1};
        for (size_t i = 0; i < result_.women_names.size(); ++i)
            by_name_[result_.women_names[i]] = AgentId{Side::Woman, static_cast<int>(i) + 1};
    }

    const std::string& original_name(AgentId a) const {
        const auto& names = a.side == Side::Man ? result_.men_names : result_.women_names;
        return names[a.index - 1];
    }

    void read_pref_block(std::vector<char>& has_block) {
        if (cur_.kind != Token::Ident) fail("agent name");
        const std::string owner_name = cur_.text;
        auto it = by_name_.find(owner_name);
        if (it == by_name_.end()) throw UnknownAlternative(owner_name);
        const AgentId owner = it->second;
        const int dense = result_.market.dense(owner);
        if (has_block[dense]) throw DuplicateAgent(owner_name);
        has_block[dense] = 1;
        advance();

        if (cur_.kind != Token::LBrace) fail("'{'");
        advance();

        std::vector<std::pair<AgentId, AgentId>> pairs;
        if (cur_.kind != Token::RBrace) {
            for (;;) {
                AgentId a = read_term(owner);
                if (cur_.kind != Token::Gt) fail("'>'");
                advance();
                AgentId b = read_term(owner);
                pairs.emplace_back(a, b);
                if (cur_.kind == Token::Semi) {
                    advance();
                    continue;
                }
                break;
            }
        }
        if (cur_.kind != Token::RBrace) fail("';' or '}'");
        advance();

        try {
            result_.market.declare_pref(owner, pairs);
        } catch (const CycleError& e) {
            std::vector<std::string> cycle;
            cycle.reserve(e.cycle.size());
            for (const std::string& canonical : e.cycle) cycle.push_back(display_name(canonical));
            throw CycleError(std::move(cycle), owner_name);
        }
    }

    // A term is '@' (the owner) or an opposite-side agent's name.
    AgentId read_term(AgentId owner) {
        if (cur_.kind == Token::At) {
            advance();
            return owner;
        }
        if (cur_.kind != Token::Ident) fail("alternative");
        auto it = by_name_.find(cur_.text);
        if (it == by_name_.end() || it->second.side == owner.side) throw UnknownAlternative(cur_.text);
        advance();
        return it->second;
    }

    // Canonical id ("m2") back to the user's spelling, for error messages.
    std::string display_name(const std::string& canonical) const {
        for (const auto& [name, id] : by_name_)
            if (to_string(id) == canonical) return name;
        return canonical;
    }

    Lexer lex_;
    Token cur_;
    ParsedMarket result_;
    std::set<std::string> declared_;
    std::map<std::string, AgentId> by_name_;
};

}  // namespace

ParsedMarket parse_market(const std::string& text) { return Parser(text).run(); }

std::string serialize_market(const Market& m) {
    std::string out = "men";
    for (AgentId a : m.men()) out += " " + to_string(a);
    out += "\nwomen";
    for (AgentId w : m.women()) out += " " + to_string(w);
    out += "\n";
    for (int i = 0; i < m.size(); ++i) {
        const AgentId a = m.agent(i);
        const auto term = [&](AgentId x) { return x == a ? std::string("@") : to_string(x); };
        out += "pref " + to_string(a) + " {";
        const auto pairs = m.pref(a).hasse_pairs();
        for (size_t k = 0; k < pairs.size(); ++k) {
            out += k ? "; " : " ";
            out += term(pairs[k].first) + " > " + term(pairs[k].second);
        }
        out += pairs.empty() ? "}\n" : " }\n";
    }
    return out;
}

std::vector<LabeledEdge> label_dominance_edges(const Market& m, const DominanceGraph& g,
                                               const std::vector<std::string>& labels) {
    std::vector<LabeledEdge> out;
    for (int from = 0; from < g.size(); ++from) {
        for (int to = 0; to < g.size(); ++to) {
            if (!g.edge[to][from]) continue;
            LabeledEdge e;
            e.from = labels[from];
            e.to = labels[to];
            e.strict = g.strict(to, from);
            for (AgentId member : g.witness.at({to, from}).members(m))
                e.witness.push_back(to_string(member));
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<LabeledEdge> label_covering_edges(const CoveringRelation& c,
                                              const std::vector<std::string>& labels) {
    std::vector<LabeledEdge> out;
    for (int from = 0; from < c.size(); ++from)
        for (int to = 0; to < c.size(); ++to)
            if (c.covers(to, from)) out.push_back({labels[from], labels[to], true, {}});
    return out;
}

std::string export_dot(const SolveReport& report) {
    std::string out;
    out += "// Edge x -> y reads: y dominates x (solid) or y covers x (dashed).\n";
    out += "digraph matchcore {\n";
    out += "  rankdir=BT;\n";
    for (const std::string& label : report.labels) out += "  \"" + label + "\";\n";
    for (const LabeledEdge& e : report.dominance_edges)
        out += "  \"" + e.from + "\" -> \"" + e.to + "\";\n";
    for (const LabeledEdge& e : report.covering_edges)
        out += "  \"" + e.from + "\" -> \"" + e.to + "\" [style=dashed];\n";
    out += "}\n";
    return out;
}

std::string export_json(const SolveReport& report) {
    using json = nlohmann::ordered_json;
    json j;
    j["schema"] = "matchcore/1";
    j["market"] = report.market_name;

    json men = json::array();
    for (AgentId a : report.market.men()) men.push_back(to_string(a));
    j["men"] = std::move(men);
    json women = json::array();
    for (AgentId w : report.market.women()) women.push_back(to_string(w));
    j["women"] = std::move(women);

    json matchings = json::array();
    for (size_t k = 0; k < report.domain.size(); ++k) {
        const Matching& mu = report.domain[k];
        json entry;
        entry["label"] = report.labels[k];
        json pairs = json::array();
        for (AgentId man : report.market.men()) {
            const AgentId partner = mu.partner(report.market, man);
            if (partner != man) pairs.push_back({to_string(man), to_string(partner)});
        }
        entry["pairs"] = std::move(pairs);
        json single = json::array();
        for (int i = 0; i < report.market.size(); ++i)
            if (mu.single(i)) single.push_back(to_string(report.market.agent(i)));
        entry["single"] = std::move(single);
        matchings.push_back(std::move(entry));
    }
    j["matchings"] = std::move(matchings);

    if (report.weak_core) j["weak_core"] = *report.weak_core;
    if (report.strong_core) j["strong_core"] = *report.strong_core;
    if (report.compromise_core) j["compromise_core"] = *report.compromise_core;
    if (report.top_cycle) j["top_cycle"] = *report.top_cycle;
    if (report.fisher_uncovered) j["fisher_uncovered"] = *report.fisher_uncovered;
    if (report.vnm_stable_sets) j["vnm_stable_sets"] = *report.vnm_stable_sets;
    if (report.men_optimal_core) j["men_optimal_core"] = *report.men_optimal_core;
    if (report.women_optimal_core) j["women_optimal_core"] = *report.women_optimal_core;

    json dom = json::array();
    for (const LabeledEdge& e : report.dominance_edges) {
        json entry;
        entry["from"] = e.from;
        entry["to"] = e.to;
        entry["strict"] = e.strict;
        entry["witness"] = e.witness;
        dom.push_back(std::move(entry));
    }
    j["dominance_edges"] = std::move(dom);

    json cov = json::array();
    for (const LabeledEdge& e : report.covering_edges) {
        json entry;
        entry["from"] = e.from;
        entry["to"] = e.to;
        cov.push_back(std::move(entry));
    }
    j["covering_edges"] = std::move(cov);

    return j.dump(2) + "\n";
}

}  // namespace matchcore
