#include "uma/csv.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace uma {

std::string format_double(double x) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf.data(), end);
}

std::string observer_row(std::size_t run_id, const Environment& env, std::size_t target, const ObserverRecord& r) {
    std::string row = std::to_string(run_id) + ',' + std::to_string(r.t) + ",observer,";
    if (r.pos) row += std::to_string(*r.pos);
    row += ',' + std::to_string(target) + ',';
    if (r.pos) row += std::to_string(env.distance(*r.pos, target));
    row += ',' + format_double(r.err_pcr) + ',' + format_double(r.err_closure) + ",,";
    if (r.pos) row += format_double(r.value);
    return row;
}

std::string sniffy_row(std::size_t run_id, std::size_t target, const SniffyRecord& r) {
    std::string row = std::to_string(run_id) + ',' + std::to_string(r.t) + ",sniffy," + std::to_string(r.pos) + ',' +
                      std::to_string(target) + ',' + std::to_string(r.dist) + ",,,";
    if (r.t > 0) row += to_string(r.action);
    row += ',' + format_double(r.value);
    return row;
}

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw std::out_of_range("no CSV column named " + std::string(name));
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV input");
    t.header = split(line);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() != t.header.size())
            throw std::runtime_error("CSV line " + std::to_string(lineno) + ": expected " +
                                     std::to_string(t.header.size()) + " fields, got " +
                                     std::to_string(fields.size()));
        t.rows.push_back(std::move(fields));
    }
    return t;
}

}  // namespace uma
