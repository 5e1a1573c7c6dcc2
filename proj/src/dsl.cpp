#include "youngbook/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace youngbook {

namespace {

std::string strip(const std::string& s)
{
    auto begin = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    auto end = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    return begin < end ? std::string(begin, end) : std::string{};
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    out.push_back(current);
    return out;
}

int parse_int(const std::string& text)
{
    std::string t = strip(text);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError("expected a nonnegative integer, got '" + text + "'");
    }
    if (t.size() > 6) throw ParseError("integer too large: '" + text + "'");
    return std::stoi(t);
}

const char* const kPageKinds[] = {"shifted:", "skew:", "trunc:", "nrs:", "ars:"};

bool starts_with_kind(const std::string& s)
{
    std::string t = strip(s);
    return std::any_of(std::begin(kPageKinds), std::end(kPageKinds),
                       [&](const char* k) { return t.rfind(k, 0) == 0; });
}

// key=value settings separated by `sep`; a bare "minus" token sets the flag.
std::map<std::string, std::string> parse_settings(const std::string& body, char sep, bool& minus)
{
    std::map<std::string, std::string> out;
    std::string last_key;
    for (const std::string& raw : split(body, sep)) {
        std::string token = strip(raw);
        if (token == "minus") {
            minus = true;
            continue;
        }
        auto eq = token.find('=');
        if (eq == std::string::npos) {
            // continuation of a comma list value, e.g. a=1,2
            if (last_key.empty()) throw ParseError("malformed setting '" + token + "'");
            out[last_key] += "," + token;
            continue;
        }
        last_key = strip(token.substr(0, eq));
        if (out.count(last_key)) throw ParseError("duplicate setting '" + last_key + "'");
        out[last_key] = token.substr(eq + 1);
    }
    return out;
}

const std::string& require(const std::map<std::string, std::string>& settings, const std::string& key,
                           const std::string& context)
{
    auto it = settings.find(key);
    if (it == settings.end()) throw ParseError(context + ": missing '" + key + "='");
    return it->second;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::string t = strip(text);
    if (t.empty()) return out;
    for (const std::string& part : split(t, ',')) out.push_back(parse_int(part));
    return out;
}

PageShape parse_page(const std::string& text)
{
    std::string t = strip(text);
    auto colon = t.find(':');
    if (colon == std::string::npos) throw ParseError("page '" + text + "' has no kind prefix");
    std::string kind = t.substr(0, colon);
    std::string body = t.substr(colon + 1);

    if (kind == "shifted") {
        return make_shifted(Partition(parse_int_list(body)));
    }
    if (kind == "skew" || kind == "trunc") {
        char sep = kind == "skew" ? '/' : '\\';
        auto pos = body.find(sep);
        std::string outer = pos == std::string::npos ? body : body.substr(0, pos);
        std::string inner = pos == std::string::npos ? "" : body.substr(pos + 1);
        Partition lambda(parse_int_list(outer));
        Partition mu(parse_int_list(inner));
        return kind == "skew" ? make_skew(lambda, mu) : make_truncated(lambda, mu);
    }
    if (kind == "nrs") {
        bool minus = false;
        auto settings = parse_settings(body, ',', minus);
        for (const auto& [key, value] : settings) {
            if (key != "n" && key != "r" && key != "s") throw ParseError("nrs: unknown setting '" + key + "'");
        }
        int n = parse_int(require(settings, "n", "nrs"));
        int r = settings.count("r") ? parse_int(settings.at("r")) : 0;
        int s = settings.count("s") ? parse_int(settings.at("s")) : 0;
        return make_nrs_staircase(n, r, s, minus);
    }
    if (kind == "ars") {
        bool minus = false;
        std::map<std::string, std::string> settings;
        for (const std::string& raw : split(body, ';')) {
            auto part = parse_settings(raw, ',', minus);
            for (auto& [key, value] : part) {
                if (settings.count(key)) throw ParseError("ars: duplicate setting '" + key + "'");
                settings[key] = value;
            }
        }
        for (const auto& [key, value] : settings) {
            if (key != "a" && key != "r" && key != "s") throw ParseError("ars: unknown setting '" + key + "'");
        }
        Composition a(parse_int_list(require(settings, "a", "ars")));
        int r = settings.count("r") ? parse_int(settings.at("r")) : 0;
        int s = settings.count("s") ? parse_int(settings.at("s")) : 0;
        return make_ars_staircase(a, r, s, minus);
    }
    throw ParseError("unknown page kind '" + kind + "'");
}

BookShape parse_book(const std::string& text)
{
    std::string t = strip(text);
    if (t.rfind("book:", 0) != 0) {
        return BookShape({parse_page(t)});
    }
    std::string body = strip(t.substr(5));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw ParseError("book must be written book:[page;page;...]");
    }
    body = body.substr(1, body.size() - 2);
    // `;` separates pages but also ars settings; a piece that does not start
    // with a page kind continues the previous page.
    std::vector<std::string> pages;
    for (const std::string& piece : split(body, ';')) {
        if (starts_with_kind(piece) || pages.empty()) {
            pages.push_back(piece);
        } else {
            pages.back() += ";" + piece;
        }
    }
    std::vector<PageShape> shapes;
    for (const std::string& p : pages) shapes.push_back(parse_page(p));
    return BookShape(std::move(shapes));
}

}  // namespace youngbook
