#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sperner/set_word.hpp"

namespace sperner {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ground set wider than kCapacity, or a set that does not fit its ground set.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Exhaustive sweep refused because 2^n exceeds the configured guard.
class GroundSetTooLarge : public Error {
 public:
  using Error::Error;
};

class AmbiguousHomogeneous : public Error {
 public:
  AmbiguousHomogeneous(std::vector<SetWord> atoms)
      : Error("family has " + std::to_string(atoms.size()) + " homogeneous atoms"),
        atoms_(std::move(atoms)) {}
  const std::vector<SetWord>& atoms() const { return atoms_; }

 private:
  std::vector<SetWord> atoms_;
};

class NotHomogeneous : public Error {
 public:
  NotHomogeneous(SetWord witness)
      : Error("set {" + to_string(witness) + "} splits the proposed homogeneous set"),
        witness_(witness) {}
  SetWord witness() const { return witness_; }

 private:
  SetWord witness_;
};

class NotKSperner : public Error {
 public:
  NotKSperner(std::vector<SetWord> chain)
      : Error("family contains a " + std::to_string(chain.size()) + "-chain"), chain_(std::move(chain)) {}
  const std::vector<SetWord>& chain() const { return chain_; }

 private:
  std::vector<SetWord> chain_;
};

class RetriesExhausted : public Error {
 public:
  RetriesExhausted(const std::string& what, std::optional<SetWord> witness)
      : Error(what), witness_(witness) {}
  const std::optional<SetWord>& witness() const { return witness_; }

 private:
  std::optional<SetWord> witness_;
};

}  // namespace sperner
