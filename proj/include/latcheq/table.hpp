#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latcheq/signal.hpp"

namespace latcheq {

class MissingRoleError : public std::invalid_argument {
public:
    explicit MissingRoleError(const std::string& role)
        : std::invalid_argument("missing signal '" + role + "'"), role_(role) {}
    const std::string& role() const { return role_; }

private:
    std::string role_;
};

/// Named signals in declaration order.
class SignalTable {
public:
    using Entry = std::pair<std::string, Signal>;

    SignalTable() = default;
    SignalTable(std::initializer_list<Entry> entries);

    /// Appends, or replaces the signal of an existing name in place.
    void set(const std::string& name, Signal s);
    const Signal* find(std::string_view name) const;
    const Signal& get(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name) != nullptr; }

    const std::vector<Entry>& entries() const { return entries_; }
    std::vector<std::string> names() const;
    std::vector<Signal> signals() const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const SignalTable&, const SignalTable&) = default;

private:
    std::vector<Entry> entries_;
};

} // namespace latcheq
