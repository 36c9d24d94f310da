#include "vclab/io.hpp"

#include "vclab/error.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <limits>
#include <sstream>

namespace vclab {

namespace {

[[noreturn]] void parse_error(const std::string &what) { throw Error(ErrorCode::Parse, what); }

const Json &member(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        parse_error(std::string("missing member '") + key + "'");
    return j.at(key);
}

std::size_t size_from_json(const Json &j, const char *what)
{
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        parse_error(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

std::string_view library_version() noexcept { return "0.1.0"; }

Json to_json(const Scalar &x)
{
    if (x.is_integer()) {
        const auto &n = x.numerator();
        if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
            return n.convert_to<std::int64_t>();
    }
    return x.to_string();
}

Scalar scalar_from_json(const Json &j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Scalar::parse(std::to_string(j.get<std::uint64_t>())) : Scalar(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Scalar::parse(j.get<std::string>());
        } catch (const Error &e) {
            parse_error(e.what());
        }
    }
    if (j.is_number_float())
        parse_error("floating-point coordinate " + j.dump() + "; write it as an integer or \"num/den\"");
    parse_error("expected a rational, got " + j.dump());
}

ExtendedScalar extended_from_json(const Json &j)
{
    if (j.is_string()) {
        auto text = j.get<std::string>();
        if (text == "-inf" || text == "inf" || text == "+inf")
            return ExtendedScalar::parse(text);
    }
    return ExtendedScalar(scalar_from_json(j));
}

Json to_json(const Point &p)
{
    Json out = Json::array();
    for (const auto &x : p.coords())
        out.push_back(to_json(x));
    return out;
}

Json to_json(const PointSet &s)
{
    Json points = Json::array();
    for (const auto &p : s)
        points.push_back(to_json(p));
    return Json{{"dim", s.dim()}, {"points", std::move(points)}};
}

PointSet point_set_from_json(const Json &j)
{
    std::size_t dim = size_from_json(member(j, "dim"), "dim");
    if (dim == 0)
        parse_error("dim must be positive");
    const Json &arr = member(j, "points");
    if (!arr.is_array())
        parse_error("points must be an array");
    std::vector<Point> points;
    for (const auto &row : arr) {
        if (!row.is_array() || row.size() != dim)
            parse_error("point " + row.dump() + " does not have " + std::to_string(dim) + " coordinates");
        std::vector<Scalar> coords;
        for (const auto &x : row)
            coords.push_back(scalar_from_json(x));
        points.emplace_back(std::move(coords));
    }
    try {
        return PointSet(dim, std::move(points));
    } catch (const Error &e) {
        parse_error(e.what());
    }
}

PointSet parse_point_set(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception &e) {
        parse_error(e.what());
    }
    return point_set_from_json(j);
}

PointSet read_point_set_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_point_set(buf.str());
}

Json to_json(const Box &b)
{
    Json out = Json::array();
    for (const auto &iv : b.intervals())
        out.push_back(Json::array({iv.lo().to_string(), iv.hi().to_string()}));
    return out;
}

Box box_from_json(const Json &j)
{
    if (!j.is_array() || j.empty())
        parse_error("box must be a non-empty array of [lo, hi] pairs");
    std::vector<Interval> ivs;
    for (const auto &pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            parse_error("interval " + pair.dump() + " is not a [lo, hi] pair");
        try {
            ivs.emplace_back(extended_from_json(pair[0]), extended_from_json(pair[1]));
        } catch (const Error &e) {
            parse_error(e.what());
        }
    }
    return Box(std::move(ivs));
}

Json to_json(const Concept &region)
{
    if (const auto *b = std::get_if<Box>(&region))
        return Json{{"type", "box"}, {"intervals", to_json(*b)}};
    if (const auto *c = std::get_if<Cube>(&region))
        return Json{{"type", "cube"}, {"center", to_json(c->center())}, {"radius", to_json(c->radius())}};
    const auto &cut = std::get<AxisCut>(region);
    return Json{{"type", "cut"}, {"axis", cut.axis}, {"threshold", to_json(cut.threshold)}};
}

Concept concept_from_json(const Json &j)
{
    const Json &type = member(j, "type");
    if (type == "box")
        return box_from_json(member(j, "intervals"));
    if (type == "cube") {
        const Json &c = member(j, "center");
        if (!c.is_array() || c.empty())
            parse_error("cube center must be a non-empty array");
        std::vector<Scalar> coords;
        for (const auto &x : c)
            coords.push_back(scalar_from_json(x));
        try {
            return Cube(Point(std::move(coords)), scalar_from_json(member(j, "radius")));
        } catch (const Error &e) {
            parse_error(e.what());
        }
    }
    if (type == "cut")
        return AxisCut{size_from_json(member(j, "axis"), "axis"), scalar_from_json(member(j, "threshold"))};
    parse_error("unknown region type " + type.dump());
}

Json to_json(const ClassDescriptor &cls)
{
    return Json{{"kind", std::string(to_string(cls.kind))},
                {"dim", cls.dim},
                {"anchor", cls.anchor ? to_json(*cls.anchor) : Json(nullptr)}};
}

ClassDescriptor class_from_json(const Json &j)
{
    const Json &kind = member(j, "kind");
    if (!kind.is_string())
        parse_error("class kind must be a string");
    ClassDescriptor cls;
    try {
        cls.kind = parse_class_kind(kind.get<std::string>());
    } catch (const Error &e) {
        parse_error(e.what());
    }
    cls.dim = size_from_json(member(j, "dim"), "dim");
    if (j.contains("anchor") && !j.at("anchor").is_null())
        cls.anchor = box_from_json(j.at("anchor"));
    try {
        cls.validate();
    } catch (const Error &e) {
        parse_error(e.what());
    }
    return cls;
}

SubsetMask parse_mask(std::string_view raw, std::size_t n)
{
    std::string text = trim(raw);
    bool bits = !text.empty() && text.find_first_not_of("01") == std::string::npos &&
                (text.size() > 1 || n == 1);
    if (bits) {
        if (text.size() != n)
            throw Error(ErrorCode::InvalidArgument, "mask '" + text + "' has width " + std::to_string(text.size()) +
                                                        " but the set has " + std::to_string(n) + " points");
        return SubsetMask::from_bit_string(text);
    }
    if (n > SubsetMask::max_width)
        throw Error(ErrorCode::InvalidArgument, "set too large for a mask");
    if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
        char close = text.front() == '{' ? '}' : ']';
        if (text.back() != close)
            throw Error(ErrorCode::InvalidArgument, "unbalanced mask '" + text + "'");
        text = trim(std::string_view(text).substr(1, text.size() - 2));
    }
    std::uint64_t m = 0;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorCode::InvalidArgument, "bad mask index '" + item + "'");
        std::size_t i = std::stoul(item);
        if (i >= n)
            throw Error(ErrorCode::InvalidArgument,
                        "mask index " + item + " out of range for " + std::to_string(n) + " points");
        m |= std::uint64_t{1} << i;
    }
    return SubsetMask(m, n);
}

std::string mask_indices(const SubsetMask &mask)
{
    std::string out = "{";
    for (std::size_t i = 0; i < mask.width(); ++i)
        if (mask.test(i))
            out += (out.size() > 1 ? "," : "") + std::to_string(i);
    return out + "}";
}

Json to_json(const ShatteringCertificate &cert)
{
    Json ws = Json::array();
    for (std::size_t m = 0; m < cert.witnesses.size(); ++m)
        ws.push_back(Json{{"mask", SubsetMask(m, cert.set.size()).to_bit_string()},
                          {"region", to_json(cert.witnesses[m].region)}});
    return Json{{"set", to_json(cert.set)}, {"class", to_json(cert.cls)}, {"witnesses", std::move(ws)}};
}

ShatteringCertificate certificate_from_json(const Json &j)
{
    ShatteringCertificate cert{point_set_from_json(member(j, "set")), class_from_json(member(j, "class")), {}};
    const Json &ws = member(j, "witnesses");
    if (!ws.is_array() || ws.size() != (std::size_t{1} << cert.set.size()))
        parse_error("certificate must list one witness per mask");
    for (std::size_t m = 0; m < ws.size(); ++m) {
        const Json &mask = member(ws[m], "mask");
        if (!mask.is_string() || parse_mask(mask.get<std::string>(), cert.set.size()).bits() != m)
            parse_error("witness " + std::to_string(m) + " is out of mask order");
        cert.witnesses.push_back(CarveWitness{concept_from_json(member(ws[m], "region")), cert.cls});
    }
    return cert;
}

Json to_json(const OrderConfig &config)
{
    return Json{{"n", config.n}, {"d", config.d}, {"with_origin", config.with_origin}, {"ranks", config.ranks}};
}

std::string sha256_hex(std::string_view data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::Internal, "SHA-256 failed");
    static const char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string digest(const Json &j) { return sha256_hex(j.dump()); }

Json without_timing(const Json &j)
{
    if (j.is_object()) {
        Json out = Json::object();
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "wall_time_seconds")
                out[it.key()] = without_timing(it.value());
        return out;
    }
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto &x : j)
            out.push_back(without_timing(x));
        return out;
    }
    return j;
}

} // namespace vclab
