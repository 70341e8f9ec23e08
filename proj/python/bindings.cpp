#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <vector>

#include "timelock/error.hpp"
#include "timelock/metrics.hpp"
#include "timelock/pipeline.hpp"
#include "timelock/resampler.hpp"
#include "timelock/synth.hpp"

namespace py = pybind11;
using namespace timelock;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const Array& a) {
  if (a.ndim() != 1) throw py::value_error("expected a 1-D array");
  return std::vector<double>(a.data(), a.data() + a.size());
}

Array to_array(const std::vector<double>& v) { return Array(static_cast<py::ssize_t>(v.size()), v.data()); }

Array matrix_to_array(const Matrix& m) {
  Array out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return out;
}

}  // namespace

PYBIND11_MODULE(_timelock, m) {
  m.doc() = "Event-locked trial warping by windowed-sinc resampling";

  static py::exception<Error> error_type(m, "TimelockError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::enum_<WindowKind>(m, "WindowKind")
      .value("Kaiser", WindowKind::Kaiser)
      .value("Hann", WindowKind::Hann)
      .value("Blackman", WindowKind::Blackman);
  py::enum_<PadMode>(m, "PadMode").value("Adjacent", PadMode::Adjacent).value("Zero", PadMode::Zero);

  py::class_<SincConfig>(m, "SincConfig")
      .def(py::init([](int half_width, WindowKind window, double beta, bool anti_alias) {
             SincConfig c{half_width, window, beta, anti_alias};
             c.validate();
             return c;
           }),
           py::arg("half_width") = 32, py::arg("window") = WindowKind::Kaiser,
           py::arg("beta") = 14.0, py::arg("anti_alias") = true)
      .def_readwrite("half_width", &SincConfig::half_width)
      .def_readwrite("window", &SincConfig::window)
      .def_readwrite("beta", &SincConfig::beta)
      .def_readwrite("anti_alias", &SincConfig::anti_alias);

  py::class_<Trial>(m, "Trial")
      .def(py::init([](const Array& samples, double f_samp,
                       const std::vector<std::pair<std::size_t, std::string>>& events) {
             Trial t{to_vector(samples), f_samp, {}};
             for (const auto& [i, label] : events) t.events.push_back({i, label});
             return validate_trial(std::move(t));
           }),
           py::arg("samples"), py::arg("f_samp"), py::arg("events") = py::list())
      .def_property_readonly("samples", [](const Trial& t) { return to_array(t.samples); })
      .def_readonly("f_samp", &Trial::f_samp)
      .def_property_readonly("nyquist", &Trial::nyquist)
      .def_property_readonly("events",
                             [](const Trial& t) {
                               std::vector<std::pair<std::size_t, std::string>> out;
                               for (const auto& e : t.events) out.emplace_back(e.index, e.label);
                               return out;
                             })
      .def("__len__", &Trial::size);

  py::class_<Partition>(m, "Partition")
      .def_property_readonly("pre", [](const Partition& p) { return std::pair(p.pre.begin, p.pre.end); })
      .def_property_readonly("t1", [](const Partition& p) { return std::pair(p.t1.begin, p.t1.end); })
      .def_property_readonly("t2", [](const Partition& p) { return std::pair(p.t2.begin, p.t2.end); })
      .def_property_readonly("post", [](const Partition& p) { return std::pair(p.post.begin, p.post.end); });

  py::class_<WarpSpec>(m, "WarpSpec")
      .def_readonly("t1_target_len", &WarpSpec::t1_target_len)
      .def_readonly("t2_target_len", &WarpSpec::t2_target_len)
      .def_readonly("pad_left", &WarpSpec::pad_left)
      .def_readonly("pad_right", &WarpSpec::pad_right)
      .def_property_readonly("r1", &WarpSpec::r1)
      .def_property_readonly("r2", &WarpSpec::r2);

  py::class_<DtwResult>(m, "DtwResult")
      .def_property_readonly("cost_matrix", [](const DtwResult& r) { return matrix_to_array(r.cost_matrix); })
      .def_readonly("path", &DtwResult::path)
      .def_readonly("distance", &DtwResult::distance)
      .def_readonly("normalized_distance", &DtwResult::normalized_distance)
      .def_property_readonly("similarity", &DtwResult::similarity);

  py::class_<IntervalReport>(m, "IntervalReport")
      .def_readonly("ratio", &IntervalReport::ratio)
      .def_readonly("correlation", &IntervalReport::correlation)
      .def_readonly("dtw", &IntervalReport::dtw)
      .def_readonly("energy_in", &IntervalReport::energy_in)
      .def_readonly("energy_out", &IntervalReport::energy_out)
      .def_property_readonly("energy_ratio", &IntervalReport::energy_ratio);

  py::class_<WarpReport>(m, "WarpReport")
      .def_readonly("warped", &WarpReport::warped)
      .def_readonly("partition", &WarpReport::warped_partition)
      .def_property_readonly("per_interval", [](const WarpReport& r) {
        return std::vector<IntervalReport>(r.per_interval.begin(), r.per_interval.end());
      });

  m.def(
      "generate",
      [](double f_samp, double f1, double f2, double duration, std::array<double, 3> event_fracs,
         std::array<double, 2> amplitudes, std::array<double, 2> phases) {
        return generate(SynthSpec{f_samp, f1, f2, duration, event_fracs, amplitudes, phases});
      },
      py::arg("f_samp") = 2048.0, py::arg("f1") = SynthSpec{}.f1, py::arg("f2") = SynthSpec{}.f2,
      py::arg("duration") = 4.0, py::arg("event_fracs") = std::array<double, 3>{0.25, 0.5, 0.75},
      py::arg("amplitudes") = std::array<double, 2>{1.0, 1.0},
      py::arg("phases") = std::array<double, 2>{0.0, 0.0});

  m.def(
      "resample",
      [](const Array& segment, std::size_t out_len, const SincConfig& cfg) {
        return to_array(resample(to_vector(segment), out_len, cfg));
      },
      py::arg("segment"), py::arg("out_len"), py::arg("cfg") = SincConfig{});

  m.def(
      "resample_padded",
      [](const Array& full, std::size_t begin, std::size_t end, std::size_t out_len,
         std::size_t pad_left, std::size_t pad_right, const SincConfig& cfg, PadMode mode) {
        return to_array(resample_padded(to_vector(full), {begin, end}, out_len, pad_left, pad_right, cfg, mode));
      },
      py::arg("full"), py::arg("begin"), py::arg("end"), py::arg("out_len"), py::arg("pad_left"),
      py::arg("pad_right"), py::arg("cfg") = SincConfig{}, py::arg("mode") = PadMode::Adjacent);

  m.def("partition_from_events",
        [](const Trial& t) { return partition_from_events(t); }, py::arg("trial"));

  m.def("plan_warp", &plan_warp, py::arg("partition"), py::arg("t1_target"), py::arg("t2_target"),
        py::arg("pad_fraction") = 0.1, py::arg("f_samp") = 2048.0, py::arg("preserve_length") = true);

  m.def(
      "warp_trial",
      [](const Trial& t, const Partition& p, const WarpSpec& spec, const SincConfig& cfg, PadMode mode) {
        WarpOptions o;
        o.sinc = cfg;
        o.pad_mode = mode;
        py::gil_scoped_release release;
        return warp_trial(t, p, spec, o);
      },
      py::arg("trial"), py::arg("partition"), py::arg("spec"), py::arg("cfg") = SincConfig{},
      py::arg("mode") = PadMode::Adjacent);

  m.def(
      "align_batch",
      [](const std::vector<Trial>& trials, std::optional<std::pair<std::size_t, std::size_t>> targets,
         double pad_fraction, const SincConfig& cfg) {
        std::vector<BatchItem> items;
        for (const auto& t : trials) items.push_back({t, partition_from_events(t)});
        TargetPolicy policy = MeanLengths{};
        if (targets) policy = FixedTargets{targets->first, targets->second};
        WarpOptions o;
        o.sinc = cfg;
        py::gil_scoped_release release;
        return align_batch(items, policy, pad_fraction, o);
      },
      py::arg("trials"), py::arg("targets") = py::none(), py::arg("pad_fraction") = 0.1,
      py::arg("cfg") = SincConfig{});

  m.def("pearson", [](const Array& x, const Array& y) { return pearson(to_vector(x), to_vector(y)); });
  m.def("dtw", [](const Array& x, const Array& y) { return dtw(to_vector(x), to_vector(y)); });
  m.def("energy", [](const Array& x) { return energy(to_vector(x)); });
  m.def("power", [](const Array& x, double f_samp) { return power(to_vector(x), f_samp); },
        py::arg("x"), py::arg("f_samp"));
}
