#include "acute/point_io.hpp"

#include "acute/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>

namespace acute {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void check_scale(int scale_k) {
    if (scale_k < 0 || scale_k > kMaxScaleK) {
        throw InvalidInput("scale exponent must be in [0, " + std::to_string(kMaxScaleK) + "]");
    }
}

}  // namespace

Coord parse_scaled(std::string_view text, int scale_k) {
    check_scale(scale_k);
    const std::string_view original = text;
    auto fail = [&](std::string_view why) -> Coord {
        throw InvalidInput("bad coordinate '" + std::string(original) + "': " + std::string(why));
    };
    text = trim(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string digits;
    int exponent = 0;
    bool seen_point = false;
    std::size_t pos = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) --exponent;
        } else {
            break;
        }
    }
    if (digits.empty()) return fail("no digits");
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') return fail("unexpected character");
        int e = 0;
        std::string_view rest = text.substr(pos + 1);
        if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
        const auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
        if (ec != std::errc{} || end != rest.data() + rest.size() || e < -400 || e > 400) {
            return fail("bad exponent");
        }
        exponent += e;
    }
    exponent += scale_k;

    // value = digits * 10^exponent; keep the integer part and the first
    // dropped digit for rounding.
    const auto first = digits.find_first_not_of('0');
    if (first == std::string::npos) return 0;
    digits.erase(0, first);
    std::string integer = digits;
    char round_digit = '0';
    if (exponent >= 0) {
        if (integer.size() + static_cast<std::size_t>(exponent) > 18) return fail("out of range");
        integer.append(static_cast<std::size_t>(exponent), '0');
    } else {
        const auto drop = static_cast<std::size_t>(-exponent);
        if (drop <= integer.size()) {
            round_digit = integer[integer.size() - drop];
            integer.resize(integer.size() - drop);
        } else {
            integer.clear();  // below 0.1 units; rounds to zero
        }
        if (integer.size() > 18) return fail("out of range");
    }
    Coord value = 0;
    for (char c : integer) value = value * 10 + (c - '0');
    if (round_digit >= '5') ++value;
    if (value > kMaxCoordinate) return fail("magnitude exceeds 2^50 after scaling");
    return negative ? -value : value;
}

std::string format_scaled(Coord value, int scale_k) {
    check_scale(scale_k);
    const bool negative = value < 0;
    std::string digits = std::to_string(negative ? -value : value);
    const auto k = static_cast<std::size_t>(scale_k);
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    std::string integer = digits.substr(0, digits.size() - k);
    std::string fraction = digits.substr(digits.size() - k);
    while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
    std::string out = negative ? "-" : "";
    out += integer;
    if (!fraction.empty()) out += "." + fraction;
    return out;
}

std::vector<Point> read_points_csv(std::istream& in, int scale_k) {
    check_scale(scale_k);
    std::vector<Point> points;
    std::string line;
    std::size_t line_no = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view row = line;
        if (const auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
        row = trim(row);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
            throw InvalidInput("line " + std::to_string(line_no) + ": expected 'x,y'");
        }
        const auto xs = trim(row.substr(0, comma));
        const auto ys = trim(row.substr(comma + 1));
        if (header_allowed && xs == "x" && ys == "y") {
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        try {
            points.push_back({parse_scaled(xs, scale_k), parse_scaled(ys, scale_k)});
        } catch (const InvalidInput& err) {
            throw InvalidInput("line " + std::to_string(line_no) + ": " + err.what());
        }
    }
    if (in.bad()) throw InvalidInput("read error");
    return points;
}

void write_points_csv(std::ostream& out, std::span<const Point> points, int scale_k) {
    out << "x,y\n";
    for (const Point& p : points) {
        out << format_scaled(p.x, scale_k) << ',' << format_scaled(p.y, scale_k) << '\n';
    }
}

std::string tour_document(const Tour& tour, std::size_t n, int scale_k, const Timing& timing) {
    nlohmann::ordered_json transforms = nlohmann::ordered_json::array();
    for (FrameTransform t : tour.transforms) transforms.push_back(to_string(t));
    nlohmann::ordered_json doc;
    doc["result"] = {
        {"n", n},
        {"scale_k", scale_k},
        {"acute", tour.acute},
        {"max_angle_rad", tour.max_angle.radians()},
        {"case_taken", to_string(tour.case_taken)},
        {"transforms_applied", transforms},
        {"order", tour.order},
    };
    doc["timing"] = {{"partition_ms", timing.partition_ms}, {"construct_ms", timing.construct_ms}};
    return doc.dump(2) + "\n";
}

std::vector<std::size_t> read_tour(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    const std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') {
        try {
            const auto doc = nlohmann::json::parse(body);
            const auto& order = doc.contains("result") ? doc.at("result").at("order") : doc.at("order");
            return order.get<std::vector<std::size_t>>();
        } catch (const nlohmann::json::exception& err) {
            throw InvalidInput(std::string("bad tour document: ") + err.what());
        }
    }
    std::vector<std::size_t> order;
    std::size_t pos = 0;
    while (pos < body.size()) {
        const char c = body[pos];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++pos;
            continue;
        }
        std::size_t value = 0;
        const auto [end, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), value);
        if (ec != std::errc{}) {
            throw InvalidInput("bad tour index near offset " + std::to_string(pos));
        }
        order.push_back(value);
        pos = static_cast<std::size_t>(end - body.data());
    }
    return order;
}

}  // namespace acute
