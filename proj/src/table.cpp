#include "latcheq/table.hpp"

namespace latcheq {

SignalTable::SignalTable(std::initializer_list<Entry> entries) {
    for (const auto& [name, s] : entries)
        set(name, s);
}

void SignalTable::set(const std::string& name, Signal s) {
    for (auto& e : entries_) {
        if (e.first == name) {
            e.second = std::move(s);
            return;
        }
    }
    entries_.emplace_back(name, std::move(s));
}

const Signal* SignalTable::find(std::string_view name) const {
    for (const auto& e : entries_)
        if (e.first == name)
            return &e.second;
    return nullptr;
}

const Signal& SignalTable::get(std::string_view name) const {
    if (const Signal* s = find(name))
        return *s;
    throw MissingRoleError(std::string(name));
}

std::vector<std::string> SignalTable::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(e.first);
    return out;
}

std::vector<Signal> SignalTable::signals() const {
    std::vector<Signal> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(e.second);
    return out;
}

} // namespace latcheq
