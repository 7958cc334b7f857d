#pragma once

#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "ttfs/types.hpp"

namespace ttfs {

// Delay produced by a dendritic segment value u. Strictly decreasing, range
// (0, S): strongly negative segments delay by almost S, strongly positive
// ones barely at all.
inline double dendritic_delay(double u, double s) { return s / (1.0 + std::exp(u)); }

// d/du of dendritic_delay.
inline double dendritic_delay_slope(double u, double s) {
  const double e = std::exp(u);
  const double denom = 1.0 + e;
  return -s * e / (denom * denom);
}

// One fully connected layer. Weights are stored input-major (w[i*fan_out+j])
// so one presynaptic spike touches a contiguous row, matching the packed
// synapse-memory layout used by the hardware path. Dendritic segments, when
// present, hold one row per task.
struct DendriticLayer {
  int fan_in = 0;
  int fan_out = 0;
  bool has_dendrites = false;
  std::vector<double> w;  // fan_in x fan_out
  std::vector<double> u;  // n_tasks x fan_out, empty unless has_dendrites

  double weight(int i, int j) const { return w[static_cast<size_t>(i) * fan_out + j]; }
  double& weight(int i, int j) { return w[static_cast<size_t>(i) * fan_out + j]; }
  double segment(int task, int j) const { return u[static_cast<size_t>(task) * fan_out + j]; }
  double& segment(int task, int j) { return u[static_cast<size_t>(task) * fan_out + j]; }
};

struct Network {
  NetworkConfig cfg;
  std::vector<DendriticLayer> layers;

  // Fresh network with the documented initialization: weights normal with
  // mean 3*V_th/fan_in and std 1/sqrt(fan_in) so the expected accumulated
  // weight sum stays positive and a healthy share of neurons fires from the
  // start; segments normal(0, 0.1) so initial delays cluster near S/2 and
  // all tasks start symmetric. Hidden layers get dendrites when
  // `hidden_dendrites` is set; the output layer never does.
  static Network create(const NetworkConfig& cfg, bool hidden_dendrites, std::mt19937_64& rng);
};

// Everything the backward pass needs from one layer's forward sweep. Arrival
// bookkeeping is shared by all neurons of the layer; the causal set of neuron
// j is the first causal_events[j] event groups of `order`.
struct LayerTape {
  std::vector<int32_t> order;        // non-dead input indices, ascending by spike time
  std::vector<int32_t> event_start;  // group boundaries in `order` (ties share a group)
  std::vector<double> event_time;    // one entry per group

  std::vector<uint8_t> dead;           // per neuron
  std::vector<double> t_unmod;         // crossing time before the dendritic delay
  std::vector<double> t_mod;           // emitted time (equals t_unmod without dendrites)
  std::vector<double> denom;           // accumulated weight sum at acceptance
  std::vector<int32_t> causal_events;  // number of event groups in the causal set

  int num_events() const { return static_cast<int>(event_time.size()); }
};

struct NetworkTape {
  std::vector<SpikeRecord> input;                 // copy of the presented spikes
  std::vector<std::vector<SpikeRecord>> outputs;  // one entry per layer
  std::vector<LayerTape> layers;
  int task_id = 0;
};

// Event-driven forward pass of one layer in continuous time. Non-dead input
// spikes are swept in time order; after each arrival the closed-form crossing
// candidate is tested against the current segment window. An accepted
// crossing is delayed by the task's dendritic segment (when present); a
// delayed time past t_max means the neuron stays silent. Each neuron fires at
// most once. `tape` may be null for inference-only calls.
std::vector<SpikeRecord> layer_forward(std::span<const SpikeRecord> inputs,
                                       const DendriticLayer& layer, int task_id,
                                       const NetworkConfig& cfg, LayerTape* tape = nullptr);

// Layer-by-layer forward pass; returns the spike records of every layer so
// callers can inspect (and differentiate through) the hidden activity.
std::vector<std::vector<SpikeRecord>> network_forward(std::span<const SpikeRecord> input,
                                                      const Network& net, int task_id,
                                                      NetworkTape* tape = nullptr);

// Fraction of non-dead neurons in the first hidden layer over a set of
// inputs. Used as an initialization diagnostic: a freshly created network
// should keep a healthy share of its hidden neurons firing.
double hidden_alive_fraction(const Network& net,
                             std::span<const std::vector<SpikeRecord>> inputs, int task_id);

}  // namespace ttfs
