// Python bindings for the main operations: family builders, abelianization,
// minimal generating sets and certified rewriting, kernel H1 via
// Reidemeister-Schreier, Smith normal form, and the character computations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "km/families.hpp"
#include "km/homs.hpp"
#include "km/oracles.hpp"
#include "km/rewrite.hpp"
#include "km/schreier.hpp"
#include "km/symchar.hpp"
#include "km/verify.hpp"

namespace py = pybind11;

namespace {

km::Family family_arg(const std::string& name) {
    auto f = km::parse_family(name);
    if (!f) throw py::value_error("unknown family: " + name);
    return *f;
}

km::EnumMode mode_arg(const std::string& name) {
    auto m = km::parse_mode(name);
    if (!m) throw py::value_error("unknown mode: " + name);
    return *m;
}

km::Quad quad_arg(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) {
        auto q = km::parse_quad_name(obj.cast<std::string>());
        if (!q) throw py::value_error("not a quad label");
        return *q;
    }
    auto t = obj.cast<std::vector<int>>();
    if (t.size() != 4) throw py::value_error("quad needs four entries");
    return km::Quad(t[0], t[1], t[2], t[3]);
}

py::dict invariants_dict(const km::AbelianInvariants& inv) {
    py::dict d;
    d["free_rank"] = inv.free_rank;
    py::list torsion;
    for (const mpz_class& t : inv.torsion) torsion.append(py::int_(py::str(t.get_str())));
    d["torsion"] = std::move(torsion);
    d["pretty"] = inv.to_string();
    return d;
}

km::SparseIntMatrix matrix_from_rows(const std::vector<std::vector<long long>>& rows) {
    int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    km::SparseIntMatrix m(static_cast<int>(rows.size()), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != ncols)
            throw py::value_error("ragged matrix rows");
        for (int c = 0; c < ncols; ++c)
            if (rows[r][c]) m.set(static_cast<int>(r), c, mpz_class(static_cast<long>(rows[r][c])));
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_kmgroups, m) {
    m.doc() = "Exact computations with the Kim-Manturov pentagon-relation groups";

    py::class_<km::Presentation>(m, "Presentation")
        .def_property_readonly("generators",
                               [](const km::Presentation& p) { return p.generators; })
        .def_property_readonly("family",
                               [](const km::Presentation& p) { return km::family_name(p.family); })
        .def_property_readonly("n", [](const km::Presentation& p) { return p.n; })
        .def_property_readonly("mode",
                               [](const km::Presentation& p) { return km::mode_name(p.mode); })
        .def_property_readonly("relators",
                               [](const km::Presentation& p) {
                                   py::list out;
                                   for (const km::Word& r : p.relators) {
                                       py::list rel;
                                       for (const km::Letter& l : r)
                                           rel.append(py::make_tuple(l.gen, l.sign));
                                       out.append(std::move(rel));
                                   }
                                   return out;
                               })
        .def("__len__", [](const km::Presentation& p) { return p.generator_count(); })
        .def("to_text", &km::presentation_to_text)
        .def("to_json", &km::presentation_to_json)
        .def("validate", &km::validate)
        .def("h1", [](const km::Presentation& p) { return invariants_dict(km::h1(p)); })
        .def("__repr__", [](const km::Presentation& p) {
            std::ostringstream os;
            os << "<Presentation " << km::family_name(p.family) << " n=" << p.n << " "
               << p.generator_count() << " generators, " << p.relators.size() << " relators>";
            return os.str();
        });

    m.def(
        "build_presentation",
        [](const std::string& family, int n, const std::string& mode) {
            return km::build_family(family_arg(family), n, mode_arg(mode));
        },
        py::arg("family"), py::arg("n"), py::arg("mode") = "full");
    m.def("presentation_from_text",
          [](const std::string& text) { return km::presentation_from_text(text); });
    m.def("delta5_four_generator_presentation", &km::delta5_four_generator_presentation);
    m.def("delta5_index2_subgroup_presentation", &km::delta5_index2_subgroup_presentation);

    m.def(
        "h1",
        [](const std::string& family, int n, const std::string& mode) {
            return invariants_dict(km::h1(km::build_family(family_arg(family), n, mode_arg(mode))));
        },
        py::arg("family"), py::arg("n"), py::arg("mode") = "full");

    m.def(
        "canonical_quad",
        [](const py::object& quad, bool signed_action) {
            auto c = km::canonical_quad(quad_arg(quad), signed_action);
            return py::make_tuple(km::quad_name(c.quad), c.sign);
        },
        py::arg("quad"), py::arg("signed") = false);

    m.def(
        "lambda_generators",
        [](const std::string& family, int n) {
            std::vector<std::string> out;
            for (const km::Quad& q : km::lambda_generators(n, family_arg(family)))
                out.push_back(km::quad_name(q));
            return out;
        },
        py::arg("family"), py::arg("n"));

    m.def(
        "rewrite_in_lambda",
        [](const std::string& family, int n, const py::object& quad) {
            km::Presentation p = km::build_family(family_arg(family), n, km::EnumMode::full);
            km::LambdaRewriter rw(p);
            km::RewriteResult r = rw.rewrite(quad_arg(quad));
            py::dict d;
            d["word"] = km::format_word(r.word, p.generators);
            d["moves"] = r.certificate.moves.size();
            d["certificate_ok"] = km::verify_certificate(r.certificate, p);
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("quad"));

    m.def(
        "kernel_h1",
        [](const std::string& family, int n, const std::string& hom, const std::string& mode) {
            km::Presentation p = km::build_family(family_arg(family), n, mode_arg(mode));
            if (hom == "eps_all_ones" && p.family == km::Family::delta && n == 5)
                p = km::delta5_four_generator_presentation();
            km::KernelH1Result res = km::h1_kernel(p, km::make_hom(hom, p));
            py::dict d;
            d["invariants"] = invariants_dict(res.invariants);
            d["cosets"] = res.num_cosets;
            d["schreier_generators"] = res.rs_generators;
            d["schreier_relators"] = res.rs_relators;
            d["simplified_generators"] = res.simplified_generators;
            d["simplified_relators"] = res.simplified_relators;
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("hom"), py::arg("mode") = "reduced");

    m.def("smith_normal_form", [](const std::vector<std::vector<long long>>& rows) {
        km::SnfResult snf = km::smith_normal_form(matrix_from_rows(rows));
        py::list out;
        for (const mpz_class& f : snf.factors) out.append(py::int_(py::str(f.get_str())));
        return out;
    });

    m.def("lattice_image_invariants", [](const std::vector<std::vector<long long>>& rows) {
        km::LatticeInvariants li = km::lattice_image_invariants(matrix_from_rows(rows));
        py::dict d;
        d["image"] = invariants_dict(li.image);
        d["quotient"] = invariants_dict(li.quotient);
        return d;
    });

    m.def(
        "phi3",
        [](const py::object& quad, int n) { return km::phi3(quad_arg(quad), n); },
        py::arg("quad"), py::arg("n"));
    m.def(
        "phi2",
        [](const py::object& quad, int n) { return km::phi2(quad_arg(quad), n); },
        py::arg("quad"), py::arg("n"));

    m.def("hook_dim", [](const std::vector<int>& diagram) {
        return py::int_(py::str(km::hook_dim(km::Partition{diagram}).get_str()));
    });
    m.def(
        "character_table_rows",
        [](int n) {
            py::dict d;
            py::list classes;
            for (const km::Partition& p : km::partitions(n))
                classes.append(km::partition_name(p));
            d["classes"] = std::move(classes);
            auto render = [](const km::ClassFunction& f) {
                py::list out;
                for (const mpz_class& v : f.values) out.append(py::int_(py::str(v.get_str())));
                return out;
            };
            d["chi_2"] = render(km::class_function_subsets(n, 2));
            d["chi_3"] = render(km::class_function_subsets(n, 3));
            for (auto label : {km::IrrepLabel::row_n, km::IrrepLabel::row_n1_1,
                               km::IrrepLabel::row_n2_2, km::IrrepLabel::row_n3_3})
                d[("chi_" + km::irrep_label_name(label, n)).c_str()] =
                    render(km::class_function_irrep(label, n));
            return d;
        },
        py::arg("n"));

    m.def(
        "verify_all",
        [](bool include_slow, std::uint64_t seed) {
            km::verify::Options opts;
            opts.include_slow = include_slow;
            opts.seed = seed;
            py::list out;
            for (const km::CheckLine& c : km::verify::run_all(opts)) {
                py::dict d;
                d["name"] = c.name;
                d["pass"] = c.pass;
                d["expected"] = c.expected;
                d["actual"] = c.actual;
                d["ms"] = c.ms;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("include_slow") = false, py::arg("seed") = 20260810ull);
}
