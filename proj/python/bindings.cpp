#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "heisfock/cherednik.hpp"
#include "heisfock/errors.hpp"
#include "heisfock/json_io.hpp"
#include "heisfock/lr.hpp"
#include "heisfock/partition.hpp"
#include "heisfock/schar.hpp"
#include "heisfock/symfunc.hpp"

namespace py = pybind11;
namespace hf = heisfock;
namespace hj = heisfock::json;
using Json = nlohmann::json;

// Partitions cross the boundary as lists of ints; everything with rational
// coefficients crosses as JSON text in the CLI encoding.
namespace {

hf::Partition part(const std::vector<int>& parts) { return hf::Partition::from_padded(parts); }

std::string dump(const Json& j) { return j.dump(); }

hf::Rational rational(const std::string& text) { return hf::parse_rational(text); }

hf::FockVector fock(const std::string& text) { return hj::decode_fock(Json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_heisfock, m) {
  m.doc() = "Exact graded Heisenberg actions on the Fock space";

  static py::exception<hf::Error> error(m, "HeisfockError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const hf::Error& e) {
      py::set_error(error, (std::string(hf::to_string(e.kind())) + ": " + e.what()).c_str());
    } catch (const Json::exception& e) {
      py::set_error(error, (std::string("InvalidInput: ") + e.what()).c_str());
    }
  });

  m.def("canonical", [](const std::vector<int>& p) { return part(p).vec(); });
  m.def("partitions_of", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : hf::partitions_of(n)) out.push_back(p.vec());
    return out;
  });
  m.def("transpose", [](const std::vector<int>& p) { return hf::transpose(part(p)).vec(); });
  m.def("content_sum", [](const std::vector<int>& p) { return hf::content_sum(part(p)); });
  m.def("d_stat", [](const std::vector<int>& p) { return hf::d_stat(part(p)); });
  m.def("partwise_add", [](const std::vector<int>& mu, int b, const std::vector<int>& tau) {
    return hf::partwise_add(part(mu), b, part(tau)).vec();
  });
  m.def("is_coprime", [](const std::vector<int>& p, int b) { return hf::is_coprime(part(p), b); });
  m.def("coprime_decompose", [](const std::vector<int>& p, int b) {
    const auto [mu, tau] = hf::coprime_decompose(part(p), b);
    return std::make_pair(mu.vec(), tau.vec());
  });

  m.def("character_table", [](int n) { return dump(hj::encode(hf::character_table(n))); });
  m.def("seed_character_table", [](const std::string& text) {
    hf::seed_character_table(hj::decode_character_table(Json::parse(text)));
  });
  m.def("lr_coefficient", [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
    return hf::lr_coefficient(part(lam), part(mu), part(nu));
  });
  m.def("kronecker_product", [](const std::vector<int>& sigma, const std::string& rep) {
    return dump(hj::encode(hf::kronecker_product(part(sigma), hj::decode_virtual_rep(Json::parse(rep)))));
  });
  m.def("exterior_power_perm", [](int d, int i) { return dump(hj::encode(hf::exterior_power_perm(d, i))); });

  m.def("schur_multiply", [](const std::string& f, const std::string& g) {
    return dump(hj::encode(hf::schur_multiply(hj::decode_symfunc(Json::parse(f)), hj::decode_symfunc(Json::parse(g)))));
  });
  m.def("plethysm_pb", [](const std::string& f, int b) {
    return dump(hj::encode(hf::plethysm_pb(hj::decode_symfunc(Json::parse(f)), b)));
  });

  m.def("b_op", [](int i, int b, const std::string& x, unsigned jobs) {
    py::gil_scoped_release release;
    return dump(hj::encode(hf::b_op(i, b, fock(x), jobs)));
  }, py::arg("i"), py::arg("b"), py::arg("x"), py::arg("jobs") = 1);
  m.def("b_tau", [](const std::vector<int>& tau, int b, const std::string& x, unsigned jobs) {
    py::gil_scoped_release release;
    return dump(hj::encode(hf::b_tau(part(tau), b, fock(x), jobs)));
  }, py::arg("tau"), py::arg("b"), py::arg("x"), py::arg("jobs") = 1);
  m.def("heis_modp", [](const std::vector<int>& tau, int b, long long p, const std::string& x, unsigned jobs) {
    py::gil_scoped_release release;
    return dump(hj::encode(hf::heis_modp(part(tau), b, p, fock(x), jobs)));
  }, py::arg("tau"), py::arg("b"), py::arg("p"), py::arg("x"), py::arg("jobs") = 1);
  m.def("heis_neg", [](const std::vector<int>& tau, int b, long long p, const std::string& x, bool conjectural,
                       unsigned jobs) {
    py::gil_scoped_release release;
    return dump(hj::encode(hf::heis_neg(part(tau), b, p, fock(x), conjectural, jobs)));
  }, py::arg("tau"), py::arg("b"), py::arg("p"), py::arg("x"), py::arg("conjectural") = false, py::arg("jobs") = 1);

  m.def("simple_image_pos", [](const std::vector<int>& eta, const std::string& mval, const std::vector<int>& tau,
                               long a, long b) {
    return dump(hj::encode(hf::simple_image_pos({part(eta), rational(mval)}, part(tau), hf::ParamLambda(a, b))));
  });
  m.def("simple_image_neg", [](const std::vector<int>& eta, const std::string& mval, const std::vector<int>& tau,
                               long a, long b) {
    return dump(hj::encode(hf::simple_image_neg({part(eta), rational(mval)}, part(tau), hf::ParamLambda(a, b))));
  });
  m.def("preferred_lift_degree", [](const std::vector<int>& eta, long a, long b) {
    return hf::format_rational(hf::preferred_lift(part(eta), hf::ParamLambda(a, b)).m);
  });
  m.def("support_dim", [](const std::vector<int>& eta, int b) { return hf::support_dim(part(eta), b); });
  m.def("possible_supports", [](int n, int b) { return dump(hj::encode(hf::possible_supports(n, b))); });
  m.def("p_stability_interval", [](long long z, long long p, int n) {
    return dump(hj::encode(hf::p_stability_interval(z, p, n)));
  });
  m.def("verma_hilbert", [](const std::vector<int>& eta, const std::string& mval, int max_deg) {
    return dump(hj::encode(hf::verma_hilbert(part(eta), rational(mval), max_deg)));
  });
  m.def("character_pipeline", [](const std::vector<int>& eta, long a, long b, long long p,
                                 const std::map<std::vector<int>, std::string>& table, unsigned jobs) {
    std::map<hf::Partition, hf::FockVector> decoded;
    for (const auto& [mu, cls] : table) decoded[part(mu)] = fock(cls);
    py::gil_scoped_release release;
    return dump(hj::encode(hf::character_pipeline(part(eta), hf::ParamLambda(a, b), p, decoded, jobs)));
  }, py::arg("eta"), py::arg("a"), py::arg("b"), py::arg("p"), py::arg("table"), py::arg("jobs") = 1);
}
