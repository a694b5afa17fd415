#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uma/observer.hpp"
#include "uma/sniffy.hpp"

namespace uma {

inline constexpr std::string_view kCsvHeader = "run_id,t,mode,pos,target,dist,err_pcr,err_closure,action,value";

// shortest decimal text that reads back to the same double
std::string format_double(double x);

std::string observer_row(std::size_t run_id, const Environment& env, std::size_t target, const ObserverRecord& r);
std::string sniffy_row(std::size_t run_id, std::size_t target, const SniffyRecord& r);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(std::string_view name) const;  // throws if absent
};

// Plain comma-separated reader: no quoting, header row required.
CsvTable read_csv(std::istream& in);

}  // namespace uma
