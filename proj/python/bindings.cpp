#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idkit/catalog_io.hpp"
#include "idkit/json_io.hpp"

namespace py = pybind11;
using namespace idkit;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& el : j) out.append(json_to_py(el));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

Json py_to_json(const py::handle& h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<long long>();
    if (py::isinstance<py::float_>(h)) return h.cast<double>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::dict>(h)) {
        Json out = Json::object();
        for (auto item : h.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::sequence>(h)) {
        Json out = Json::array();
        for (auto item : h.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw py::type_error("cannot convert to JSON value");
}

std::vector<Branch> parse_branches(const std::vector<std::string>& bitStrings) {
    std::vector<Branch> out;
    out.reserve(bitStrings.size());
    for (const auto& s : bitStrings) out.push_back(Branch::parse(s));
    return out;
}

DefinabilityOracle oracle_by_name(const std::string& name) {
    if (name == "membership") return DefinabilityOracle::membership();
    if (name == "interval") return DefinabilityOracle::interval();
    if (name == "never") return DefinabilityOracle::never();
    if (name == "always") return DefinabilityOracle::always();
    throw InvalidInput("unknown oracle " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pair-coloring identities: canonical forms, closure classes, tree colorings "
              "and the finite condition hierarchy";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);

    py::class_<Coloring>(m, "Coloring")
        .def(py::init([](const py::dict& d) { return coloring_from_json(py_to_json(d)); }),
             py::arg("data"))
        .def_property_readonly("field", [](const Coloring& c) { return c.field(); })
        .def("color_of", &Coloring::color_of, py::arg("label_i"), py::arg("label_j"))
        .def("to_dict", [](const Coloring& c) { return json_to_py(to_json(c)); })
        .def("__eq__", [](const Coloring& a, const Coloring& b) { return a == b; })
        .def("__repr__", [](const Coloring& c) {
            return "Coloring(" + to_json(c).dump() + ")";
        });

    py::class_<Identity>(m, "Identity")
        .def_static(
            "from_classes",
            [](const py::dict& d) { return identity_from_json(py_to_json(d)); },
            py::arg("data"))
        .def_property_readonly("size", &Identity::size)
        .def_property_readonly("classes",
                               [](const Identity& id) {
                                   py::list out;
                                   for (const auto& block : id.classes()) {
                                       py::list b;
                                       for (const auto& p : block)
                                           b.append(py::make_tuple(p.a, p.b));
                                       out.append(b);
                                   }
                                   return out;
                               })
        .def("singleton_classes",
             [](const Identity& id) {
                 py::list out;
                 for (const auto& p : id.singleton_classes())
                     out.append(py::make_tuple(p.a, p.b));
                 return out;
             })
        .def("as_coloring", &Identity::as_coloring)
        .def("to_dict", [](const Identity& id) { return json_to_py(to_json(id)); })
        .def("__eq__", [](const Identity& a, const Identity& b) { return a == b; })
        .def("__lt__", [](const Identity& a, const Identity& b) { return a < b; })
        .def("__hash__",
             [](const Identity& id) {
                 std::size_t h = id.size();
                 for (ClassId c : id.code()) h = h * 1000003 + c;
                 return h;
             })
        .def("__repr__",
             [](const Identity& id) { return "Identity(" + to_json(id).dump() + ")"; });

    py::class_<VIdentity>(m, "VIdentity")
        .def_static(
            "from_classes",
            [](const py::dict& d) { return v_identity_from_json(py_to_json(d)); },
            py::arg("data"))
        .def_property_readonly("size", &VIdentity::size)
        .def("forget_order", &VIdentity::forget_order)
        .def("to_dict", [](const VIdentity& id) { return json_to_py(to_json(id)); })
        .def("__eq__", [](const VIdentity& a, const VIdentity& b) { return a == b; })
        .def("__repr__",
             [](const VIdentity& id) { return "VIdentity(" + to_json(id).dump() + ")"; });

    m.def("identity_of", &identity_of, py::arg("coloring"));
    m.def("v_identity_of", &v_identity_of, py::arg("coloring"));
    m.def("equivalent", &equivalent, py::arg("lhs"), py::arg("rhs"));
    m.def(
        "restrict",
        [](const Identity& id, const std::vector<Vertex>& subset) {
            return restrict_to(id, subset);
        },
        py::arg("identity"), py::arg("subset"));
    m.def(
        "realizes",
        [](const Coloring& f, const Identity& g) -> py::object {
            auto e = realizes(f, g);
            if (!e) return py::none();
            return json_to_py(to_json(*e));
        },
        py::arg("f"), py::arg("g"));
    m.def(
        "realizes",
        [](const Coloring& f, const Coloring& g) -> py::object {
            auto e = realizes(f, g);
            if (!e) return py::none();
            return json_to_py(to_json(*e));
        },
        py::arg("f"), py::arg("g"));
    m.def(
        "v_realizes",
        [](const Coloring& f, const VIdentity& g) -> py::object {
            auto e = v_realizes(f, g);
            if (!e) return py::none();
            return json_to_py(to_json(*e));
        },
        py::arg("f"), py::arg("g"));

    m.def("enumerate_identities", &enumerate_identities, py::arg("size"),
          py::arg("bound") = kDefaultEnumerationBound);
    m.def(
        "realized_identities",
        [](const Coloring& f, std::uint32_t maxSize) {
            auto ids = realized_identities(f, maxSize);
            return std::vector<Identity>(ids.begin(), ids.end());
        },
        py::arg("f"), py::arg("max_size"));

    m.def("duplicate", &duplicate, py::arg("f"), py::arg("tuple"));
    m.def("end_duplicate", &end_duplicate, py::arg("f"), py::arg("seg_len"));
    m.def("eh_amalgam", &eh_amalgam, py::arg("sequence"));
    m.def(
        "cl_step",
        [](const std::vector<Identity>& catalog, std::uint32_t maxSeqLen, std::uint32_t maxSize) {
            std::set<Identity> cat(catalog.begin(), catalog.end());
            auto out = cl_step(cat, maxSeqLen, maxSize);
            return std::vector<Identity>(out.begin(), out.end());
        },
        py::arg("catalog"), py::arg("max_seq_len"), py::arg("max_size"));

    m.def(
        "generate_idm",
        [](std::uint32_t maxSize, std::uint32_t witnessBound, std::uint32_t depthBudget,
           bool onePointOnly) {
            return json_to_py(to_json(generate_idm(maxSize, witnessBound, depthBudget,
                                                   onePointOnly)));
        },
        py::arg("max_size"), py::arg("witness_bound"), py::arg("depth_budget") = 0,
        py::arg("one_point_only") = false);
    m.def(
        "generate_ide",
        [](std::uint32_t maxSize, std::uint32_t witnessBound, std::uint32_t depthBudget) {
            return json_to_py(to_json(generate_ide(maxSize, witnessBound, depthBudget)));
        },
        py::arg("max_size"), py::arg("witness_bound"), py::arg("depth_budget") = 0);
    m.def(
        "membership",
        [](const Identity& g, const std::string& cls, std::uint32_t witnessBound,
           std::uint32_t depthBudget) {
            ClassTag tag = cls == "IDM" ? ClassTag::IDM : ClassTag::IDE;
            auto res = membership(g, tag, witnessBound, depthBudget);
            py::dict out;
            out["member"] = res.member;
            out["witness_bound"] = res.witnessBound;
            out["depth_budget"] = res.depthBudget;
            if (res.entry) {
                out["witness"] = json_to_py(to_json(res.entry->witness));
                out["trace"] = json_to_py(to_json(res.entry->trace));
            }
            return out;
        },
        py::arg("g"), py::arg("cls"), py::arg("witness_bound"), py::arg("depth_budget") = 0);

    m.def(
        "meet_coloring",
        [](const std::vector<std::string>& branches) {
            return meet_coloring(parse_branches(branches));
        },
        py::arg("branches"));
    m.def("build_im", &build_Im, py::arg("m"), py::arg("bound") = kDefaultImBound);
    m.def(
        "special_sequences",
        [](std::uint32_t mm) {
            py::list out;
            for (const auto& s : special_sequences(mm)) {
                py::list entry;
                for (const auto& b : s.entries) entry.append(b.str());
                out.append(entry);
            }
            return out;
        },
        py::arg("m"));
    m.def("tree_realizes", &tree_realizes, py::arg("g"), py::arg("size_bound") = 6);

    m.def(
        "verify_t2_pair_claim",
        [](std::uint32_t mm) { return json_to_py(to_json(verify_t2_pair_claim(mm))); },
        py::arg("m"));
    m.def(
        "verify_s2_step",
        [](std::uint32_t k) { return json_to_py(to_json(verify_s2_step(k))); }, py::arg("k"));
    m.def(
        "verify_lemma_qq",
        [](std::uint32_t mm, Vertex universe, std::uint32_t depth, const std::string& oracle) {
            return json_to_py(to_json(verify_lemma_qq(mm, universe, depth,
                                                      oracle_by_name(oracle))));
        },
        py::arg("m") = 1, py::arg("universe") = 5, py::arg("depth") = 2,
        py::arg("oracle") = "membership");
    m.def(
        "verify_t2_kernel",
        [](std::uint32_t mm, Vertex universe, std::uint32_t depth) {
            return json_to_py(to_json(verify_t2_kernel(
                mm, universe, depth, DefinabilityOracle::builtin_family(universe))));
        },
        py::arg("m") = 1, py::arg("universe") = 5, py::arg("depth") = 2);
    m.def(
        "verify_tree_idm",
        [](std::uint32_t maxSize, std::uint32_t witnessBound) {
            return json_to_py(to_json(verify_tree_idm(maxSize, witnessBound)));
        },
        py::arg("max_size") = 4, py::arg("witness_bound") = 8);

    m.def(
        "generate_p",
        [](std::uint32_t depth, Vertex universe, const std::string& oracle) {
            auto gen = generate_P(depth, universe, oracle_by_name(oracle));
            py::list out;
            for (const auto& c : gen.conditions) out.append(json_to_py(to_json(*c)));
            return out;
        },
        py::arg("depth"), py::arg("universe"), py::arg("oracle") = "membership");
    m.def(
        "one_point_extensions",
        [](const py::dict& cond, Vertex universe) {
            auto q = condition_from_json(py_to_json(cond));
            py::list out;
            for (const auto& p : one_point_extensions(q, universe))
                out.append(json_to_py(to_json(*p)));
            return out;
        },
        py::arg("condition"), py::arg("universe"));
    m.def(
        "amalgamate",
        [](const py::dict& left, const py::dict& right, const std::string& oracle) {
            auto res = amalgamate(condition_from_json(py_to_json(left)),
                                  condition_from_json(py_to_json(right)),
                                  oracle_by_name(oracle));
            py::dict out;
            out["ok"] = res.status == AmalgamResult::Status::Ok;
            if (res.status == AmalgamResult::Status::Ok)
                out["condition"] = json_to_py(to_json(*res.condition));
            else if (res.status == AmalgamResult::Status::ClauseFailed)
                out["clause"] = res.clause;
            if (!res.detail.empty()) out["detail"] = res.detail;
            return out;
        },
        py::arg("left"), py::arg("right"), py::arg("oracle") = "membership");
    m.def(
        "find_embeddings",
        [](const py::dict& cond, const Identity& pattern) {
            auto p = condition_from_json(py_to_json(cond));
            py::list out;
            for (const auto& e : find_embeddings(*p, pattern))
                out.append(json_to_py(to_json(e)));
            return out;
        },
        py::arg("condition"), py::arg("pattern"));
    m.def(
        "validate_condition",
        [](const py::dict& cond, const std::string& oracle) {
            auto p = condition_from_json(py_to_json(cond));
            return json_to_py(to_json(validate_condition(p, oracle_by_name(oracle))));
        },
        py::arg("condition"), py::arg("oracle") = "membership");
}
