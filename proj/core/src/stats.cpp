#include "kgtrade/stats.hpp"

#include <map>

namespace kgtrade {

namespace {

const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

double avg_of(const std::map<Term, uint64_t>& degrees) {
    if (degrees.empty()) return 0.0;
    uint64_t total = 0;
    for (auto& [_, d] : degrees) total += d;
    return double(total) / double(degrees.size());
}

uint64_t min_of(const std::map<Term, uint64_t>& degrees) {
    uint64_t m = 0;
    bool first = true;
    for (auto& [_, d] : degrees) {
        if (first || d < m) m = d;
        first = false;
    }
    return m;
}

uint64_t max_of(const std::map<Term, uint64_t>& degrees) {
    uint64_t m = 0;
    for (auto& [_, d] : degrees) m = std::max(m, d);
    return m;
}

std::string namespace_of(const std::string& iri) {
    size_t cut = iri.find_last_of("/#");
    if (cut == std::string::npos) return iri;
    return iri.substr(0, cut + 1);
}

}  // namespace

const std::array<const char*, kStatisticCount>& GraphStatistics::names() {
    static const std::array<const char*, kStatisticCount> kNames = {
        "statements",
        "distinct_subjects",
        "distinct_predicates",
        "distinct_objects",
        "distinct_resources",
        "distinct_literals",
        "distinct_iris",
        "literal_object_statements",
        "iri_object_statements",
        "out_degree_avg",
        "out_degree_min",
        "out_degree_max",
        "in_degree_avg",
        "in_degree_min",
        "in_degree_max",
        "predicate_frequency_avg",
        "predicate_frequency_min",
        "predicate_frequency_max",
        "distinct_subject_predicate_pairs",
        "distinct_predicate_object_pairs",
        "distinct_subject_object_pairs",
        "subject_and_object_nodes",
        "distinct_classes",
        "typed_subjects",
        "literal_length_avg",
        "literal_length_max",
        "distinct_datatypes",
        "distinct_language_tags",
        "self_loop_statements",
        "graph_density",
        "distinct_namespaces",
        "statements_per_subject_avg",
        "statements_per_object_avg",
    };
    return kNames;
}

GraphStatistics compute_statistics(const KnowledgeGraph& g) {
    GraphStatistics st;
    auto& v = st.values;

    std::set<Term> subjects, predicates, objects, resources, literals, iris, classes,
        typed_subjects;
    std::set<std::pair<Term, Term>> sp_pairs, po_pairs, so_pairs;
    std::map<Term, uint64_t> out_deg, in_deg, pred_freq;
    std::set<std::string> datatypes, lang_tags, namespaces;

    uint64_t literal_objects = 0, iri_objects = 0, self_loops = 0;
    uint64_t literal_len_total = 0, literal_len_max = 0;

    for (const Statement& s : g.statements()) {
        subjects.insert(s.subject);
        predicates.insert(s.predicate);
        objects.insert(s.object);
        for (const Term* t : {&s.subject, &s.predicate, &s.object}) {
            resources.insert(*t);
            if (t->is_iri()) {
                iris.insert(*t);
                namespaces.insert(namespace_of(t->lexical));
            } else {
                literals.insert(*t);
            }
        }
        ++out_deg[s.subject];
        ++in_deg[s.object];
        ++pred_freq[s.predicate];
        sp_pairs.insert({s.subject, s.predicate});
        po_pairs.insert({s.predicate, s.object});
        so_pairs.insert({s.subject, s.object});
        if (s.object.is_iri()) {
            ++iri_objects;
            if (s.object == s.subject) ++self_loops;
        } else {
            ++literal_objects;
            uint64_t len = s.object.token().size();
            literal_len_total += len;
            literal_len_max = std::max(literal_len_max, len);
            if (!s.object.datatype.empty()) datatypes.insert(s.object.datatype);
            if (!s.object.lang.empty()) lang_tags.insert(s.object.lang);
        }
        if (s.predicate.lexical == kRdfType) {
            classes.insert(s.object);
            typed_subjects.insert(s.subject);
        }
    }

    uint64_t both = 0;
    for (const Term& t : subjects)
        if (objects.count(t)) ++both;

    v[0] = double(g.size());
    v[1] = double(subjects.size());
    v[2] = double(predicates.size());
    v[3] = double(objects.size());
    v[4] = double(resources.size());
    v[5] = double(literals.size());
    v[6] = double(iris.size());
    v[7] = double(literal_objects);
    v[8] = double(iri_objects);
    v[9] = avg_of(out_deg);
    v[10] = double(min_of(out_deg));
    v[11] = double(max_of(out_deg));
    v[12] = avg_of(in_deg);
    v[13] = double(min_of(in_deg));
    v[14] = double(max_of(in_deg));
    v[15] = avg_of(pred_freq);
    v[16] = double(min_of(pred_freq));
    v[17] = double(max_of(pred_freq));
    v[18] = double(sp_pairs.size());
    v[19] = double(po_pairs.size());
    v[20] = double(so_pairs.size());
    v[21] = double(both);
    v[22] = double(classes.size());
    v[23] = double(typed_subjects.size());
    v[24] = literal_objects ? double(literal_len_total) / double(literal_objects) : 0.0;
    v[25] = double(literal_len_max);
    v[26] = double(datatypes.size());
    v[27] = double(lang_tags.size());
    v[28] = double(self_loops);
    v[29] = resources.empty()
                ? 0.0
                : double(g.size()) / (double(resources.size()) * double(resources.size()));
    v[30] = double(namespaces.size());
    v[31] = subjects.empty() ? 0.0 : double(g.size()) / double(subjects.size());
    v[32] = objects.empty() ? 0.0 : double(g.size()) / double(objects.size());
    return st;
}

nlohmann::ordered_json GraphStatistics::to_json() const {
    nlohmann::ordered_json j;
    for (size_t i = 0; i < kStatisticCount; ++i) j[names()[i]] = values[i];
    return j;
}

GraphStatistics GraphStatistics::from_json(const nlohmann::ordered_json& j) {
    GraphStatistics st;
    for (size_t i = 0; i < kStatisticCount; ++i) {
        if (!j.contains(names()[i])) throw Error("statistics document missing key");
        st.values[i] = j[names()[i]].get<double>();
    }
    return st;
}

}  // namespace kgtrade
