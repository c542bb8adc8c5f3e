#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace matchcore {

// Base class for every error raised by the library. Each subclass carries
// structured fields so callers can report precisely and tests can assert on
// more than message text.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed market source text.
class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, std::string expected_, std::string found_)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) +
                ": expected " + expected_ + ", found " + found_),
          line(line), col(col), expected(std::move(expected_)), found(std::move(found_)) {}

    int line;
    int col;
    std::string expected;
    std::string found;
};

// Declared preference pairs force a strict cycle (antisymmetry violation).
class CycleError : public Error {
public:
    explicit CycleError(std::vector<std::string> cycle_, std::string owner_ = "")
        : Error(make_message(cycle_, owner_)), cycle(std::move(cycle_)), owner(std::move(owner_)) {}

    std::vector<std::string> cycle;  // witness, first element repeated at the end
    std::string owner;               // agent whose pref block caused it, if known

private:
    static std::string make_message(const std::vector<std::string>& cycle,
                                    const std::string& owner) {
        std::string msg = owner.empty() ? "preference cycle: " : "pref " + owner + ": preference cycle: ";
        for (size_t i = 0; i < cycle.size(); ++i) {
            if (i) msg += " > ";
            msg += cycle[i];
        }
        return msg;
    }
};

class DuplicateAgent : public Error {
public:
    explicit DuplicateAgent(const std::string& name)
        : Error("duplicate agent declaration: " + name), name(name) {}
    std::string name;
};

class MissingPrefBlock : public Error {
public:
    explicit MissingPrefBlock(const std::string& agent)
        : Error("missing pref block for agent " + agent), agent(agent) {}
    std::string agent;
};

class UnknownAlternative : public Error {
public:
    explicit UnknownAlternative(const std::string& name)
        : Error("unknown alternative: " + name), name(name) {}
    std::string name;
};

class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what_about, long long actual, long long cap)
        : Error(what_about + " exceeds cap: " + std::to_string(actual) + " > " +
                std::to_string(cap)),
          actual(actual), cap(cap) {}
    long long actual;
    long long cap;
};

class GroundSetMismatch : public Error {
public:
    GroundSetMismatch() : Error("partial orders have different ground sets") {}
};

class MarketMismatch : public Error {
public:
    MarketMismatch() : Error("values belong to different markets") {}
};

class NotAnExtension : public Error {
public:
    explicit NotAnExtension(const std::string& agent)
        : Error("total order for " + agent + " does not extend the declared preference"),
          agent(agent) {}
    std::string agent;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("domain error: " + msg) {}
};

class BadDensity : public Error {
public:
    explicit BadDensity(double value)
        : Error("density must lie in [0,1], got " + std::to_string(value)), value(value) {}
    double value;
};

}  // namespace matchcore
