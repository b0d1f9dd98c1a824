#include "simtap/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

namespace simtap {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

double parse_double_token(std::string_view token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError("non-numeric token '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

TemporalDatabase parse_database(std::istream& in, const ParseOptions& opts) {
    std::vector<TimeSlot> slots;
    std::map<std::string, std::size_t, std::less<>> slot_index;
    ItemRegistry registry;

    std::string line;
    std::size_t line_no = 0;
    std::size_t data_lines = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;

        auto fields = split(view, '\t');
        const std::size_t expected = opts.with_tid ? 3 : 2;
        if (fields.size() != expected) {
            throw ParseError("expected " + std::to_string(expected) +
                                 " tab-separated fields, got " + std::to_string(fields.size()),
                             line_no);
        }

        std::string_view slot_label = trim(fields[opts.with_tid ? 1 : 0]);
        std::string_view items_field = fields[opts.with_tid ? 2 : 1];
        if (slot_label.empty()) {
            throw ParseError("empty time slot label", line_no);
        }

        Transaction tx;
        for (std::string_view token : split(items_field, ',')) {
            std::string_view item = trim(token);
            if (item.empty()) {
                throw ParseError("empty item token", line_no);
            }
            tx.push_back(registry.intern(item));
        }
        if (tx.empty()) {
            throw ParseError("transaction has no items", line_no);
        }
        std::sort(tx.begin(), tx.end());
        tx.erase(std::unique(tx.begin(), tx.end()), tx.end());

        auto it = slot_index.find(slot_label);
        if (it == slot_index.end()) {
            it = slot_index.emplace(std::string(slot_label), slots.size()).first;
            slots.push_back(TimeSlot{std::string(slot_label), {}});
        }
        slots[it->second].transactions.push_back(std::move(tx));
        ++data_lines;
    }

    if (data_lines == 0) {
        throw EmptyDatabaseError("input contains no transactions");
    }
    return TemporalDatabase(std::move(slots), std::move(registry));
}

TemporalDatabase parse_database(std::string_view text, const ParseOptions& opts) {
    std::istringstream in{std::string(text)};
    return parse_database(in, opts);
}

TemporalDatabase load_database_file(const std::string& path, const ParseOptions& opts) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open database file: " + path);
    }
    return parse_database(in, opts);
}

std::string serialize_database(const TemporalDatabase& db) {
    std::string out;
    for (const TimeSlot& slot : db.slots()) {
        for (const Transaction& tx : slot.transactions) {
            out += slot.label;
            out += '\t';
            for (std::size_t i = 0; i < tx.size(); ++i) {
                if (i) out += ',';
                out += db.items().label(tx[i]);
            }
            out += '\n';
        }
    }
    return out;
}

ReferenceSequence parse_reference(std::string_view text, std::size_t slot_count) {
    auto tokens = split(text, ',');
    if (tokens.size() != slot_count) {
        throw ArityError("reference has " + std::to_string(tokens.size()) +
                         " values, database has " + std::to_string(slot_count) + " slots");
    }
    std::vector<double> values;
    values.reserve(tokens.size());
    for (std::string_view token : tokens) {
        double v = parse_double_token(trim(token));
        if (!(v >= 0.0 && v <= 1.0)) {
            throw RangeError("reference value " + std::to_string(v) + " outside [0,1]");
        }
        values.push_back(v);
    }
    return ReferenceSequence(std::move(values));
}

}  // namespace simtap
