#include "dtx/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace dtx {

using json = nlohmann::json;

namespace {

void canonical(const json& j, std::string& out)
{
    switch (j.type()) {
    case json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first)
                out += ',';
            first = false;
            out += json(k).dump();
            out += ':';
            canonical(v, out);
        }
        out += '}';
        break;
    }
    case json::value_t::array: {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                out += ',';
            canonical(j[i], out);
        }
        out += ']';
        break;
    }
    case json::value_t::number_float: {
        double v = j.get<double>();
        out += std::isfinite(v) ? format_double(v == 0.0 ? 0.0 : v) : "null";
        break;
    }
    default:
        out += j.dump();
    }
}

std::string dump(const json& j)
{
    std::string out;
    canonical(j, out);
    out += '\n';
    return out;
}

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

template <class T>
T field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

json poly_terms(const PolyZZbar& p)
{
    json a = json::array();
    for (const auto& [k, c] : p.terms())
        a.push_back({k.first, k.second, c.real(), c.imag()});
    return a;
}

PolyZZbar parse_poly_terms(const json& a)
{
    if (!a.is_array())
        throw ParseError("terms must be an array");
    PolyZZbar p;
    for (const auto& t : a) {
        if (!t.is_array() || t.size() != 4)
            throw ParseError("each term must be [a, b, re, im]");
        int x = t[0].get<int>(), y = t[1].get<int>();
        if (x < 0 || y < 0)
            throw ParseError("monomial powers must be non-negative");
        p.add(x, y, cplx(t[2].get<double>(), t[3].get<double>()));
    }
    return p;
}

json zernike_terms(const ZernikeExpansion& e)
{
    json a = json::array();
    for (const auto& [nk, c] : e.values)
        a.push_back({nk.first, nk.second, c.real(), c.imag()});
    return a;
}

ZernikeExpansion parse_zernike_terms(const json& a)
{
    if (!a.is_array())
        throw ParseError("zernike must be an array");
    ZernikeExpansion e;
    for (const auto& t : a) {
        if (!t.is_array() || t.size() != 4)
            throw ParseError("each zernike entry must be [n, k, re, im]");
        int n = t[0].get<int>(), k = t[1].get<int>();
        if (n < 0 || k < 0 || k > n)
            throw ParseError("zernike index needs 0 <= k <= n");
        e.values[{n, k}] += cplx(t[2].get<double>(), t[3].get<double>());
    }
    return e;
}

json coeff_list(const std::map<int, cplx>& m)
{
    json a = json::array();
    for (const auto& [n, c] : m)
        a.push_back({n, c.real(), c.imag()});
    return a;
}

json psi_index_json(const PsiIndex& idx)
{
    return {{"n", idx.n}, {"k", idx.k}, {"parity", to_string(idx.parity)}};
}

}  // namespace

TensorInput parse_tensor_impl(const std::string& text);
SinoCoeffs parse_sino_coeffs_impl(const std::string& text);

std::string format_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

int TensorInput::max_degree() const
{
    int d = -1;
    for (const auto& [k, p] : modes)
        d = std::max(d, p.degree());
    for (const auto& [k, e] : zernike)
        d = std::max(d, e.max_degree());
    return d;
}

ModeField TensorInput::to_field(const Basis* basis) const
{
    ModeField f(m);
    for (const auto& [k, p] : modes)
        f.add_mode(k, p);
    for (const auto& [k, e] : zernike) {
        if (!basis)
            throw PreconditionError("tensor input with Zernike coefficients needs a basis");
        f.add_mode(k, e.to_poly(*basis));
    }
    return f;
}

TensorInput parse_tensor_json(const std::string& text)
{
    try {
        return parse_tensor_impl(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad tensor JSON: ") + e.what());
    }
}

TensorInput parse_tensor_impl(const std::string& text)
{
    json j = parse(text);
    TensorInput t;
    t.m = field<int>(j, "m");
    if (t.m < 0)
        throw ParseError("tensor order must be non-negative");
    if (!j.contains("modes"))
        return t;
    const json& modes = j.at("modes");
    if (!modes.is_array())
        throw ParseError("modes must be an array");
    for (const auto& md : modes) {
        int k = field<int>(md, "k");
        if (std::abs(k) > t.m || (k - t.m) % 2 != 0)
            throw ParseError("mode index " + std::to_string(k) + " incompatible with order");
        if (md.contains("terms"))
            t.modes[k] += parse_poly_terms(md.at("terms"));
        if (md.contains("zernike")) {
            auto e = parse_zernike_terms(md.at("zernike"));
            for (const auto& [nk, c] : e.values)
                t.zernike[k].values[nk] += c;
        }
    }
    return t;
}

std::string tensor_to_json(const ModeField& f)
{
    json modes = json::array();
    for (const auto& [k, p] : f.modes())
        modes.push_back({{"k", k}, {"terms", poly_terms(p)}});
    return dump({{"format", format_tag}, {"m", f.order()}, {"modes", modes}});
}

SinoCoeffs parse_sino_coeffs_json(const std::string& text)
{
    try {
        return parse_sino_coeffs_impl(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad coefficient JSON: ") + e.what());
    }
}

SinoCoeffs parse_sino_coeffs_impl(const std::string& text)
{
    json j = parse(text);
    SinoCoeffs c;
    const json* list = &j;
    if (j.is_object()) {
        if (j.contains("gamma"))
            c.gamma = field<double>(j, "gamma");
        if (!j.contains("coeffs"))
            throw ParseError("missing field 'coeffs'");
        list = &j.at("coeffs");
    }
    if (!list->is_array())
        throw ParseError("coefficients must be an array");
    for (const auto& e : *list) {
        PsiIndex idx{field<int>(e, "n"), field<int>(e, "k"), Parity::plus};
        if (idx.n < 0)
            throw ParseError("negative degree in coefficients");
        try {
            idx.parity = parity_from_string(field<std::string>(e, "parity"));
        } catch (const PreconditionError& err) {
            throw ParseError(err.what());
        }
        c.add(idx, cplx(field<double>(e, "re"), field<double>(e, "im")));
    }
    return c;
}

std::string sino_coeffs_to_json(const SinoCoeffs& c)
{
    json list = json::array();
    for (const auto& [idx, v] : c.values) {
        json e = psi_index_json(idx);
        e["re"] = v.real();
        e["im"] = v.imag();
        list.push_back(e);
    }
    return dump({{"format", format_tag}, {"gamma", c.gamma}, {"coeffs", list}});
}

std::string sino_grid_to_csv(const SinoGrid& s)
{
    std::string out = "beta,alpha,re,im\n";
    for (int i = 0; i < s.grid.n_beta(); ++i)
        for (int j = 0; j < s.grid.n_alpha(); ++j) {
            cplx v = s.at(i, j);
            out += format_double(s.grid.betas[i]) + ',' + format_double(s.grid.alphas[j]) + ',' +
                   format_double(v.real()) + ',' + format_double(v.imag()) + '\n';
        }
    return out;
}

SinoGrid parse_sino_grid_csv(const std::string& text, double gamma)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("beta,alpha,re,im", 0) != 0)
        throw ParseError("sinogram CSV must start with 'beta,alpha,re,im'");
    std::vector<std::array<double, 4>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r")
            continue;
        std::array<double, 4> r{};
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int c = 0; c < 4; ++c) {
            auto res = std::from_chars(p, end, r[c]);
            if (res.ec != std::errc())
                throw ParseError("bad number in sinogram CSV: " + line);
            p = res.ptr;
            if (c < 3) {
                if (p == end || *p != ',')
                    throw ParseError("expected 4 comma-separated columns: " + line);
                ++p;
            }
        }
        rows.push_back(r);
    }
    if (rows.empty())
        throw ParseError("sinogram CSV has no rows");
    int n_alpha = 1;
    while (n_alpha < int(rows.size()) && rows[n_alpha][0] == rows[0][0])
        ++n_alpha;
    if (rows.size() % n_alpha != 0)
        throw ParseError("sinogram CSV is not a full product grid");
    int n_beta = int(rows.size() / n_alpha);

    auto matches = [&](const BoundaryGrid& g) {
        for (int i = 0; i < n_beta; ++i)
            for (int j = 0; j < n_alpha; ++j) {
                const auto& r = rows[std::size_t(i) * n_alpha + j];
                if (std::abs(r[0] - g.betas[i]) > 1e-12 || std::abs(r[1] - g.alphas[j]) > 1e-12)
                    return false;
            }
        return true;
    };
    SinoGrid s;
    s.grid = fan_beam_grid(n_beta, n_alpha, gamma);
    if (!matches(s.grid)) {
        s.grid = legendre_alpha_grid(n_beta, n_alpha, gamma);
        if (!matches(s.grid))
            throw ParseError("sinogram CSV nodes match no supported grid for this gamma");
    }
    s.values.reserve(rows.size());
    for (const auto& r : rows)
        s.values.emplace_back(r[2], r[3]);
    return s;
}

std::string range_report_to_json(const RangeReport& r)
{
    json off = json::array();
    for (const auto& idx : r.a.offending)
        off.push_back(psi_index_json(idx));
    json b = json::array();
    for (const auto& e : r.b)
        b.push_back({{"j", e.j}, {"norm", e.norm}, {"pass", e.pass}});
    json j = {{"format", format_tag},
              {"m", r.m},
              {"gamma", r.gamma},
              {"in_range", r.in_range},
              {"parity_ok", r.parity_ok},
              {"conditions",
               {{"a", {{"pass", r.a.pass}, {"residual", r.a.residual}, {"threshold", r.a.threshold},
                       {"offending", off}}},
                {"b", b},
                {"c", {{"sum", r.c.sum}, {"pass", r.c.pass}}}}}};
    return dump(j);
}

std::string itt_to_json(const IttForm& f, const Basis& basis)
{
    json tt = json::array();
    for (const auto& t : f.tt) {
        if (t.empty())
            continue;
        tt.push_back({{"j", t.order / 2},
                      {"order", t.order},
                      {"dz_coeffs", coeff_list(t.dz)},
                      {"dzbar_coeffs", coeff_list(t.dzbar)}});
    }
    json hm = json::array();
    if (!f.potential.empty()) {
        std::vector<double> r;
        for (int i = 0; i <= 32; ++i)
            r.push_back(i / 32.0);
        for (int q : f.potential.modes()) {
            RadialModeFn m = f.potential.sample_mode(q, r);
            json re = json::array(), im = json::array();
            for (cplx v : m.h) {
                re.push_back(v.real());
                im.push_back(v.imag());
            }
            hm.push_back({{"q", q}, {"r", m.r}, {"re", re}, {"im", im}});
        }
    }
    json j = {{"format", format_tag},
              {"m", f.m},
              {"gamma", f.gamma},
              {"scalar", poly_terms(f.scalar.to_poly(basis))},
              {"scalar_zernike", zernike_terms(f.scalar)},
              {"w1_zernike", zernike_terms(f.w1)},
              {"h_modes", hm},
              {"tt", tt}};
    return dump(j);
}

std::string kernel_modes_to_json(int m, double gamma, const std::vector<cplx>& z,
                                 const std::vector<KernelModes>& modes, double measured_scale,
                                 double applied_scale, double svd_diff)
{
    json zs = json::array();
    for (cplx v : z)
        zs.push_back({v.real(), v.imag()});
    json tt = json::array();
    for (const auto& km : modes) {
        json a = json::array(), b = json::array();
        for (cplx v : km.dz)
            a.push_back({v.real(), v.imag()});
        for (cplx v : km.dzbar)
            b.push_back({v.real(), v.imag()});
        tt.push_back({{"j", km.order / 2}, {"order", km.order}, {"dz", a}, {"dzbar", b}});
    }
    json j = {{"format", format_tag},
              {"m", m},
              {"gamma", gamma},
              {"route", "kernel"},
              {"z", zs},
              {"tt", tt},
              {"kernel_scale", {{"measured_ratio", measured_scale}, {"applied", applied_scale}}},
              {"svd_max_diff", svd_diff}};
    return dump(j);
}

std::string svd_table_to_json(const Basis& basis)
{
    json entries = json::array();
    for (int n = 0; n <= basis.n_max(); ++n)
        for (int k = 0; k <= n; ++k) {
            const auto& z = basis.zernike(n, k);
            entries.push_back({{"n", n},
                               {"k", k},
                               {"sigma", basis.sigma(n, k)},
                               {"zernike_norm", z.norm},
                               {"zernike", poly_terms(z.coeffs)}});
        }
    json j = {{"format", format_tag},
              {"gamma", basis.gamma()},
              {"n_max", basis.n_max()},
              {"audit",
               {{"scale", basis.audit().scale}, {"spread", basis.audit().spread}, {"samples", basis.audit().samples}}},
              {"entries", entries}};
    return dump(j);
}

}  // namespace dtx
