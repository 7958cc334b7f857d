#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttfs {

// Error taxonomy shared by the C++ core and mapped onto C status codes at the
// library boundary.
class Error : public std::runtime_error {
 public:
  enum class Kind { invalid_argument, io, parse, shape, internal };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(Kind::invalid_argument, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(Kind::io, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(Kind::parse, what) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(Kind::shape, what) {}
};

// A single spike emitted by one neuron, or the absence of one. A neuron that
// never crosses threshold inside the observation window is "dead": it carries
// no time and downstream math must not read one. Dead records hold NaN so an
// accidental read is loud.
struct SpikeRecord {
  double time;
  bool dead;

  static SpikeRecord at(double t) { return SpikeRecord{t, false}; }
  static SpikeRecord none() {
    return SpikeRecord{std::numeric_limits<double>::quiet_NaN(), true};
  }
};

// Denominator guard for the crossing candidate: an accumulated weight sum at
// or below this never fires (division would blow up at the boundary).
inline constexpr double kDenomEps = 1e-12;

enum class DendriteGradMode {
  paper,   // segment gradient scaled by the accumulated weight sum
  direct,  // plain slope of the delay activation
};

struct NetworkConfig {
  std::vector<int> layer_sizes;  // e.g. {784, 400, 400, 2}
  double t_max = 450.0;          // observation window
  double v_th = 1.0;             // threshold voltage
  double s_strength = 4.0;       // delay activation ceiling
  int n_tasks = 1;

  int input_size() const { return layer_sizes.front(); }
  int output_size() const { return layer_sizes.back(); }
  int num_layers() const { return static_cast<int>(layer_sizes.size()) - 1; }

  void validate() const {
    if (layer_sizes.size() < 2)
      throw ConfigError("layer_sizes needs at least an input and an output layer");
    for (int n : layer_sizes)
      if (n <= 0) throw ConfigError("layer sizes must be positive");
    if (t_max <= 0) throw ConfigError("t_max must be positive");
    if (v_th <= 0) throw ConfigError("v_th must be positive");
    if (s_strength <= 0) throw ConfigError("s_strength must be positive");
    if (n_tasks < 1) throw ConfigError("n_tasks must be at least 1");
  }
};

}  // namespace ttfs
