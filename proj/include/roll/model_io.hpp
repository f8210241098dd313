#pragma once

#include <string>

#include "roll/network.hpp"

namespace roll {

// Model file format "roll-model/1": a JSON object with fields
//   version    "roll-model/1"
//   activation "relu" | "leaky_relu"
//   alpha      negative-side slope (used by leaky_relu)
//   layers     [{"w": [[...], ...] row-major, "b": [...]}, ...]
void save_model(const Network& net, const std::string& path);
Network load_model(const std::string& path);

std::string model_to_json(const Network& net);
Network model_from_json(const std::string& text);

}  // namespace roll
