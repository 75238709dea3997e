// Check records and reports. Every verifier appends CheckRecords to a
// Report; a record names the law it checked and, on failure, carries a
// minimal witness (the quantifier instantiation) plus printed left/right
// values. Reports are pure data so that a (config, seed) pair always
// produces byte-identical serialized output.
#pragma once

#include <string>
#include <vector>

namespace xprod {

struct CheckRecord {
    std::string id;            // stable machine id, e.g. "twist.cocycle"
    std::string law;           // human-readable statement of the identity
    bool pass = true;
    std::vector<long long> witness;  // failing instantiation, empty on pass
    std::string witness_desc;        // meaning of the witness components
    std::string lhs, rhs;            // printed values on failure
};

struct Report {
    std::vector<CheckRecord> checks;
    std::uint64_t seed = 0;
    bool all_pass = true;

    void add(CheckRecord rec) {
        all_pass = all_pass && rec.pass;
        checks.push_back(std::move(rec));
    }

    void pass(const std::string& id, const std::string& law) { add({id, law, true, {}, "", "", ""}); }

    void fail(const std::string& id, const std::string& law, std::vector<long long> witness,
              const std::string& witness_desc, const std::string& lhs = "",
              const std::string& rhs = "") {
        add({id, law, false, std::move(witness), witness_desc, lhs, rhs});
    }

    // Convenience: record pass/fail, keeping only the first failure witness
    // per id (callers loop over instantiations and report once).
    bool has(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return true;
        return false;
    }

    const CheckRecord* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }

    void merge(const Report& other) {
        for (const auto& c : other.checks) add(c);
    }
};

}  // namespace xprod
