#include "json_text.hpp"

#include <cmath>
#include <cstdio>

namespace relgas::cli {

namespace {

void newline(std::string& out, int indent, int depth)
{
    if (indent > 0) {
        out += '\n';
        out.append(static_cast<std::size_t>(indent * depth), ' ');
    }
}

void write(std::string& out, const Json& v, int indent, int depth)
{
    switch (v.type()) {
    case Json::value_t::null:
    case Json::value_t::discarded:
        out += "null";
        return;
    case Json::value_t::boolean:
        out += v.get<bool>() ? "true" : "false";
        return;
    case Json::value_t::number_integer:
        out += std::to_string(v.get<long long>());
        return;
    case Json::value_t::number_unsigned:
        out += std::to_string(v.get<unsigned long long>());
        return;
    case Json::value_t::number_float: {
        const double x = v.get<double>();
        if (!std::isfinite(x)) {
            out += "null";
            return;
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out += buf;
        return;
    }
    case Json::value_t::string:
    case Json::value_t::binary:
        out += v.dump();
        return;
    case Json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            return;
        }
        // Arrays of scalars stay on one line.
        bool flat = true;
        for (const auto& item : v) {
            flat = flat && !item.is_structured();
        }
        out += '[';
        bool first = true;
        for (const auto& item : v) {
            if (!first) {
                out += flat && indent > 0 ? ", " : ",";
            }
            first = false;
            if (!flat) {
                newline(out, indent, depth + 1);
            }
            write(out, item, indent, depth + 1);
        }
        if (!flat) {
            newline(out, indent, depth);
        }
        out += ']';
        return;
    }
    case Json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(out, indent, depth + 1);
            out += Json(it.key()).dump();
            out += indent > 0 ? ": " : ":";
            write(out, it.value(), indent, depth + 1);
        }
        newline(out, indent, depth);
        out += '}';
        return;
    }
    }
}

} // namespace

std::string dump17(const Json& value, int indent)
{
    std::string out;
    write(out, value, indent, 0);
    return out;
}

} // namespace relgas::cli
