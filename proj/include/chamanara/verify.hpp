#pragma once

// Recomputes the published constants and compares them with the values
// stated in the text.

#include <string>
#include <vector>

#include "chamanara/surface.hpp"

namespace chamanara {

struct Claim {
  std::string id;
  std::string location;  // where the value is stated
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  int depth = 0;
  std::vector<Claim> claims;
  bool passed() const;
  const Claim* find(const std::string& id) const;
};

VerificationReport verify_paper(int depth = 8, Gluing gluing = Gluing::Chamanara);

std::string to_text(const VerificationReport& report);

}  // namespace chamanara
