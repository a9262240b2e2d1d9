#include "medax/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace medax {

namespace {

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms unsupported");

void to_little_endian(std::vector<double>& v) {
    if constexpr (std::endian::native == std::endian::big) {
        for (auto& d : v) {
            auto bytes = std::bit_cast<std::array<unsigned char, 8>>(d);
            std::reverse(bytes.begin(), bytes.end());
            d = std::bit_cast<double>(bytes);
        }
    }
}

}  // namespace

void write_field(const std::string& path, const ScalarField2& field) {
    nlohmann::json header;
    header["magic"] = "MMAF1";
    header["nx"] = field.spec.nx;
    header["ny"] = field.spec.ny;
    header["origin_x"] = field.spec.origin_x;
    header["origin_y"] = field.spec.origin_y;
    header["spacing_h"] = field.spec.spacing;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_field: cannot open " + path);
    out << header.dump() << "\n";
    std::vector<double> payload = field.values;
    to_little_endian(payload);
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write_field: write failed for " + path);
}

ScalarField2 read_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("read_field: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("read_field: missing header");
    nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
    if (header.is_discarded() || header.value("magic", "") != "MMAF1")
        throw ParseError("read_field: bad MMAF1 header");

    GridSpec spec;
    try {
        spec.nx = header.at("nx").get<int>();
        spec.ny = header.at("ny").get<int>();
        spec.origin_x = header.at("origin_x").get<double>();
        spec.origin_y = header.at("origin_y").get<double>();
        spec.spacing = header.at("spacing_h").get<double>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError("read_field: incomplete header");
    }
    spec.validate();

    ScalarField2 field(spec, 0.0);
    in.read(reinterpret_cast<char*>(field.values.data()),
            static_cast<std::streamsize>(field.values.size() * sizeof(double)));
    if (static_cast<std::size_t>(in.gcount()) != field.values.size() * sizeof(double))
        throw ParseError("read_field: truncated payload");
    to_little_endian(field.values);
    return field;
}

void write_pgm_mask(const std::string& path, const BinaryMask2& mask) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_pgm_mask: cannot open " + path);
    out << "P5\n" << mask.spec.nx << " " << mask.spec.ny << "\n255\n";
    std::vector<unsigned char> row(mask.spec.nx);
    for (int j = 0; j < mask.spec.ny; ++j) {
        for (int i = 0; i < mask.spec.nx; ++i) row[i] = mask.get(i, j) ? 255 : 0;
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
}

namespace {

int next_pgm_token(std::istream& in) {
    // skips whitespace and '#' comments
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            std::string skip;
            std::getline(in, skip);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int v;
    if (!(in >> v)) throw ParseError("pgm: expected integer token");
    return v;
}

}  // namespace

BinaryMask2 read_pgm_mask(const std::string& path, const GridSpec& spec) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("read_pgm_mask: cannot open " + path);
    std::string magic;
    in >> magic;
    if (magic != "P5" && magic != "P2") throw ParseError("read_pgm_mask: not a P2/P5 PGM");
    const int nx = next_pgm_token(in);
    const int ny = next_pgm_token(in);
    const int maxval = next_pgm_token(in);
    if (nx <= 0 || ny <= 0 || maxval <= 0 || maxval > 255)
        throw ParseError("read_pgm_mask: bad dimensions or maxval");

    GridSpec s = spec;
    s.nx = nx;
    s.ny = ny;
    s.validate();
    BinaryMask2 mask(s, false);
    if (magic == "P5") {
        in.get();  // single whitespace after maxval
        std::vector<unsigned char> row(nx);
        for (int j = 0; j < ny; ++j) {
            in.read(reinterpret_cast<char*>(row.data()), nx);
            if (in.gcount() != nx) throw ParseError("read_pgm_mask: truncated P5 payload");
            for (int i = 0; i < nx; ++i) mask.set(i, j, row[i] != 0);
        }
    } else {
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) mask.set(i, j, next_pgm_token(in) != 0);
    }
    return mask;
}

void write_pgm_rendering(const std::string& path, const ScalarField2& field) {
    const double lo = field.min_value();
    const double hi = field.max_value();
    const double range = hi > lo ? hi - lo : 1.0;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_pgm_rendering: cannot open " + path);
    out << "P5\n" << field.spec.nx << " " << field.spec.ny << "\n255\n";
    std::vector<unsigned char> row(field.spec.nx);
    for (int j = 0; j < field.spec.ny; ++j) {
        for (int i = 0; i < field.spec.nx; ++i) {
            const double t = (field.at(i, j) - lo) / range;
            row[i] = static_cast<unsigned char>(std::lround(255.0 * t));
        }
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }

    nlohmann::json side;
    side["min"] = lo;
    side["max"] = hi;
    side["nx"] = field.spec.nx;
    side["ny"] = field.spec.ny;
    std::ofstream sidecar(path + ".json");
    sidecar << side.dump(2) << "\n";
}

PointSet2 read_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("read_points_csv: cannot open " + path);
    std::vector<Point2> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(line);
        double x, y;
        char comma;
        if (!(ss >> x >> comma >> y) || comma != ',')
            throw ParseError("read_points_csv: bad line " + std::to_string(lineno));
        std::string rest;
        if (ss >> rest) throw ParseError("read_points_csv: trailing junk on line " +
                                         std::to_string(lineno));
        pts.push_back({x, y});
    }
    return PointSet2(std::move(pts));
}

}  // namespace medax
