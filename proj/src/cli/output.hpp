#ifndef HASSE_CLI_OUTPUT_HPP
#define HASSE_CLI_OUTPUT_HPP

#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hasse/quadratic.hpp"
#include "hasse/splitting.hpp"

namespace hasse::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

Format parse_format(const std::string &s);

// Every number goes out as a decimal string.
inline std::string num(const Int &n) { return n.get_str(); }
inline std::string num(std::int64_t n) { return std::to_string(n); }
inline std::string num(std::uint64_t n) { return std::to_string(n); }
inline std::string num(int n) { return std::to_string(n); }
inline std::string num(unsigned n) { return std::to_string(n); }

Json elem_json(const QuadElem &u);
Json verdict_json(const Verdict &v);

/// Writes rows and a trailing summary in the chosen format; with an --out
/// path the same records also go there as JSON lines.
class Output {
public:
    Output(Format format, std::ostream &out, std::ostream &err, const std::string &path = {});

    void row(const Json &obj);
    void summary(const Json &obj);

private:
    void text_block(const Json &obj, const std::string &title);
    void csv_line(const std::vector<std::string> &cells);

    Format format_;
    std::ostream &out_, &err_;
    std::optional<std::ofstream> file_;
    std::vector<std::string> header_;
};

/// Flattens nested objects to dotted keys; arrays are dumped as JSON text.
std::vector<std::pair<std::string, std::string>> flatten(const Json &obj);

} // namespace hasse::cli

#endif
