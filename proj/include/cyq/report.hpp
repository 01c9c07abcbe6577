#pragma once
// Verification reports shared by the verifiers.

#include <map>
#include <string>
#include <vector>

namespace cyq {

struct Failure {
    std::string identity;
    std::string witness;
};

struct Report {
    std::map<std::string, long> checked;  // identity -> number of instances evaluated
    std::vector<Failure> failures;
    std::vector<std::string> notes;

    bool ok() const { return failures.empty(); }
    bool passed(const std::string& identity) const {
        for (auto& f : failures)
            if (f.identity == identity) return false;
        return checked.count(identity) > 0;
    }
    void count(const std::string& identity, long n = 1) { checked[identity] += n; }
    void fail(const std::string& identity, const std::string& witness) {
        // one witness per identity keeps reports small
        for (auto& f : failures)
            if (f.identity == identity) return;
        failures.push_back({identity, witness});
    }
    void merge(const Report& o) {
        for (auto& [k, v] : o.checked) checked[k] += v;
        for (auto& f : o.failures) fail(f.identity, f.witness);
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    }
};

}  // namespace cyq
