#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "partgen/partition.hpp"

namespace partgen {

/// Opaque per-customer metadata (coordinates, time windows, ...), carried verbatim.
using Attributes = nlohmann::json;

/*
 * Customer id ordering used for every output listing: ids made only of
 * digits sort numerically ("2" < "10") ahead of all other ids, which sort
 * bytewise.
 */
struct IdLess {
    bool operator()(const std::string& a, const std::string& b) const;
};

struct Customer {
    std::string id;
    Part demand = 0;
    Attributes attrs = Attributes::object();

    friend bool operator==(const Customer&, const Customer&) = default;
};

/// Zero-demand node (a routing depot) carried through expansion untouched.
struct Depot {
    std::string id;
    Attributes attrs = Attributes::object();

    friend bool operator==(const Depot&, const Depot&) = default;
};

struct InstanceSpec {
    std::vector<Customer> customers;
    Part fulfiller_count = 1;
    std::optional<Depot> depot;

    friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

struct DemandCopy {
    std::string copy_id; // "<parent_id>#<ordinal>", ordinals from 1
    std::string parent_id;
    Part demand = 0;
    Attributes attrs = Attributes::object();

    friend bool operator==(const DemandCopy&, const DemandCopy&) = default;
};

struct ExpandedInstance {
    std::vector<Customer> customers; // sorted by IdLess
    std::vector<DemandCopy> copies;  // by parent, then ordinal
    std::map<std::string, std::vector<std::string>, IdLess> provenance;
    Part fulfiller_count = 1;
    std::optional<Depot> depot;

    friend bool operator==(const ExpandedInstance&, const ExpandedInstance&) = default;
};

struct CopyService {
    std::string fulfiller;
    Part amount = 0;

    friend bool operator==(const CopyService&, const CopyService&) = default;
};

/// Non-split solution on an expanded instance: copy id -> who served it and how much.
using CopyAssignment = std::map<std::string, CopyService>;

struct CustomerFulfiller {
    std::string customer;
    std::string fulfiller;

    friend bool operator<(const CustomerFulfiller& a, const CustomerFulfiller& b)
    {
        if (a.customer != b.customer)
            return IdLess{}(a.customer, b.customer);
        return a.fulfiller < b.fulfiller;
    }
    friend bool operator==(const CustomerFulfiller&, const CustomerFulfiller&) = default;
};

/// Split solution: amount of each customer's demand served by each fulfiller.
struct SplitAssignment {
    std::map<CustomerFulfiller, Part> entries;

    /// Amounts a customer received, as a partition (largest first).
    Partition split_pattern(const std::string& customer) const;
    Part served(const std::string& customer) const;

    friend bool operator==(const SplitAssignment&, const SplitAssignment&) = default;
};

/// Throws InputError on duplicate or empty ids, non-positive demands or k < 1.
void validate(const InstanceSpec& instance);

/*
 * Replaces each customer of demand n with one copy per part of
 * minimal_generator(n, k), inheriting the customer's attrs. Any split of n
 * over at most k fulfillers can then be served by whole copies.
 */
ExpandedInstance expand_instance(const InstanceSpec& instance);

/// Sum over customers of size_upper_bound(demand, k); never below the expanded copy count.
std::int64_t expansion_bound(const InstanceSpec& instance);

/*
 * Folds a non-split solution back onto the original customers: each
 * fulfiller is credited with the total demand of the copies it served.
 * Throws InputError for an unknown copy id, a copy left unassigned, an
 * amount that differs from the copy's demand, or a customer served by more
 * than k fulfillers.
 */
SplitAssignment recover_solution(const ExpandedInstance& expanded, const CopyAssignment& assignment);

} // namespace partgen
