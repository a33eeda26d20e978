#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clonekit/core.hpp"
#include "clonekit/wpo.hpp"

// File formats. Algebra: { "domain_size": t, "operations": [ { "name",
// "arity", "values" } ] }. Relation: { "domain_size": t, "arity": r,
// "tuples": [[...]] }. A function is one operation entry. Values in files
// are 0-based; words at the CLI are 1-based.

namespace clonekit {

struct NamedOperation {
    std::string name;
    OperationTable table;
};

struct AlgebraFile {
    int domain_size = 1;
    std::vector<NamedOperation> operations;

    Domain domain() const { return Domain(domain_size); }
    std::vector<OperationTable> tables() const;
    Algebra algebra() const;
};

AlgebraFile parse_algebra(const nlohmann::json& j);
nlohmann::json algebra_to_json(const AlgebraFile& alg);

Relation parse_relation(const nlohmann::json& j);
nlohmann::json relation_to_json(const Relation& r);

NamedOperation parse_operation(const nlohmann::json& j, const Domain& dom);
nlohmann::json operation_to_json(const NamedOperation& op);

/// Parses a 1-based word literal like "[1,2,2]" over the given domain.
Word parse_word(const std::string& text, const Domain& dom);
nlohmann::json word_to_json(const Word& w);

AlgebraFile load_algebra(const std::string& path);
Relation load_relation(const std::string& path);
NamedOperation load_operation(const std::string& path);

}  // namespace clonekit
