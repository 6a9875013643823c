#include "output.hpp"

#include <ostream>

#include "hasse/arith.hpp"

namespace hasse::cli {

namespace {

void flatten_into(const Json &j, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &out)
{
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) flatten_into(v, prefix.empty() ? k : prefix + "." + k, out);
        return;
    }
    if (j.is_string()) out.emplace_back(prefix, j.get<std::string>());
    else out.emplace_back(prefix, j.dump());
}

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

} // namespace

Format parse_format(const std::string &s)
{
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

Json elem_json(const QuadElem &u)
{
    Json j;
    j["x"] = num(u.x());
    j["y"] = num(u.y());
    j["den"] = num(u.den());
    j["text"] = u.to_string();
    return j;
}

Json verdict_json(const Verdict &v)
{
    Json j;
    j["kind"] = v.kind == VerdictKind::NonMember ? "NonMember" : "LikelyMember";
    j["trials"] = num(static_cast<std::uint64_t>(v.trials));
    if (v.witness) {
        const PrimeWitness &w = *v.witness;
        j["witness"] = {{"p", num(w.prime.p)},       {"x", num(w.prime.x)},       {"y", num(w.prime.y)},
                        {"sqrt_d", num(w.sqrt_d)}, {"u_p", num(w.u_p)}, {"cubic", w.cubic}};
    }
    return j;
}

std::vector<std::pair<std::string, std::string>> flatten(const Json &obj)
{
    std::vector<std::pair<std::string, std::string>> out;
    flatten_into(obj, "", out);
    return out;
}

Output::Output(Format format, std::ostream &out, std::ostream &err, const std::string &path)
    : format_(format), out_(out), err_(err)
{
    if (!path.empty()) {
        file_.emplace(path);
        if (!*file_) throw UsageError("cannot open output file " + path);
    }
}

void Output::csv_line(const std::vector<std::string> &cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << csv_escape(cells[i]);
    out_ << '\n';
}

void Output::text_block(const Json &obj, const std::string &title)
{
    if (!title.empty()) out_ << "== " << title << '\n';
    for (const auto &[k, v] : flatten(obj)) out_ << k << ": " << v << '\n';
    out_ << '\n';
}

void Output::row(const Json &obj)
{
    if (file_) *file_ << obj.dump() << '\n';
    switch (format_) {
    case Format::Json: out_ << obj.dump() << '\n'; break;
    case Format::Text: text_block(obj, ""); break;
    case Format::Csv: {
        const auto cells = flatten(obj);
        if (header_.empty()) {
            for (const auto &c : cells) header_.push_back(c.first);
            csv_line(header_);
        }
        std::vector<std::string> values;
        for (const auto &c : cells) values.push_back(c.second);
        csv_line(values);
        break;
    }
    }
    out_.flush();
}

void Output::summary(const Json &obj)
{
    if (file_) *file_ << obj.dump() << '\n';
    switch (format_) {
    case Format::Json: out_ << obj.dump() << '\n'; break;
    case Format::Text: text_block(obj, "summary"); break;
    case Format::Csv: // keep stdout a single table
        for (const auto &[k, v] : flatten(obj)) err_ << "# " << k << ": " << v << '\n';
        break;
    }
    out_.flush();
}

} // namespace hasse::cli
