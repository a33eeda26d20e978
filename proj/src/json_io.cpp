#include "clonekit/json_io.hpp"

#include <fstream>

namespace clonekit {

using nlohmann::json;

std::vector<OperationTable> AlgebraFile::tables() const {
    std::vector<OperationTable> out;
    out.reserve(operations.size());
    for (const NamedOperation& op : operations) out.push_back(op.table);
    return out;
}

Algebra AlgebraFile::algebra() const {
    return Algebra(domain(), tables());
}

NamedOperation parse_operation(const json& j, const Domain& dom) {
    if (!j.is_object() || !j.contains("arity") || !j.contains("values")) {
        throw std::invalid_argument("operation entry needs \"arity\" and \"values\"");
    }
    NamedOperation op;
    op.name = j.value("name", "");
    int arity = j.at("arity").get<int>();
    std::vector<Element> values = j.at("values").get<std::vector<Element>>();
    op.table = OperationTable(dom, arity, std::move(values));
    return op;
}

json operation_to_json(const NamedOperation& op) {
    return json{{"name", op.name}, {"arity", op.table.arity}, {"values", op.table.values}};
}

AlgebraFile parse_algebra(const json& j) {
    if (!j.is_object() || !j.contains("domain_size")) {
        throw std::invalid_argument("algebra document needs \"domain_size\"");
    }
    AlgebraFile alg;
    alg.domain_size = j.at("domain_size").get<int>();
    const Domain dom(alg.domain_size);
    if (j.contains("operations")) {
        for (const json& entry : j.at("operations")) {
            alg.operations.push_back(parse_operation(entry, dom));
        }
    }
    return alg;
}

json algebra_to_json(const AlgebraFile& alg) {
    json ops = json::array();
    for (const NamedOperation& op : alg.operations) ops.push_back(operation_to_json(op));
    return json{{"domain_size", alg.domain_size}, {"operations", std::move(ops)}};
}

Relation parse_relation(const json& j) {
    if (!j.is_object() || !j.contains("domain_size") || !j.contains("arity")) {
        throw std::invalid_argument("relation document needs \"domain_size\" and \"arity\"");
    }
    const int t = j.at("domain_size").get<int>();
    const int arity = j.at("arity").get<int>();
    std::vector<Tuple> tuples;
    if (j.contains("tuples")) tuples = j.at("tuples").get<std::vector<Tuple>>();
    return Relation(Domain(t), arity, std::move(tuples));
}

json relation_to_json(const Relation& r) {
    return json{{"domain_size", r.domain_size}, {"arity", r.arity}, {"tuples", r.tuples}};
}

Word parse_word(const std::string& text, const Domain& dom) {
    json j = json::parse(text);
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("word literal must be a nonempty array like [1,2,2]");
    }
    Word w;
    for (const json& entry : j) {
        int letter = entry.get<int>();
        if (letter < 1 || letter > dom.size) {
            throw std::invalid_argument("word letter " + std::to_string(letter) +
                                        " outside 1.." + std::to_string(dom.size));
        }
        w.push_back(letter - 1);
    }
    return w;
}

json word_to_json(const Word& w) {
    json j = json::array();
    for (Element letter : w) j.push_back(letter + 1);
    return j;
}

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

AlgebraFile load_algebra(const std::string& path) {
    return parse_algebra(load_json(path));
}

Relation load_relation(const std::string& path) {
    return parse_relation(load_json(path));
}

NamedOperation load_operation(const std::string& path) {
    json j = load_json(path);
    if (!j.contains("domain_size")) {
        throw std::invalid_argument("function document needs \"domain_size\"");
    }
    return parse_operation(j, Domain(j.at("domain_size").get<int>()));
}

}  // namespace clonekit
