#include "partgen/demand_split.hpp"

#include <algorithm>
#include <set>

#include "partgen/generator.hpp"

namespace partgen {

namespace {

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(const std::string& s)
{
    const auto first = s.find_first_not_of('0');
    return first == std::string::npos ? std::string_view(s).substr(s.size() - 1)
                                       : std::string_view(s).substr(first);
}

} // namespace

bool IdLess::operator()(const std::string& a, const std::string& b) const
{
    const bool na = all_digits(a);
    const bool nb = all_digits(b);
    if (na != nb)
        return na;
    if (na) {
        const auto sa = strip_zeros(a);
        const auto sb = strip_zeros(b);
        if (sa.size() != sb.size())
            return sa.size() < sb.size();
        if (sa != sb)
            return sa < sb;
    }
    return a < b;
}

Partition SplitAssignment::split_pattern(const std::string& customer) const
{
    std::vector<Part> amounts;
    for (const auto& [key, amount] : entries)
        if (key.customer == customer && amount > 0)
            amounts.push_back(amount);
    if (amounts.empty())
        throw InputError("customer '" + customer + "' has no recovered service");
    return Partition(std::move(amounts));
}

Part SplitAssignment::served(const std::string& customer) const
{
    Part total = 0;
    for (const auto& [key, amount] : entries)
        if (key.customer == customer)
            total = checked_add(total, amount);
    return total;
}

void validate(const InstanceSpec& instance)
{
    if (instance.fulfiller_count < 1)
        throw InputError("fulfiller count k must be at least 1, got " + std::to_string(instance.fulfiller_count));
    std::set<std::string> seen;
    for (const Customer& c : instance.customers) {
        if (c.id.empty())
            throw InputError("customer ids must be non-empty");
        if (!seen.insert(c.id).second)
            throw InputError("duplicate customer id '" + c.id + "'");
        if (c.demand < 1)
            throw InputError("customer '" + c.id + "' has non-positive demand " + std::to_string(c.demand));
    }
    if (instance.depot && seen.contains(instance.depot->id))
        throw InputError("depot id '" + instance.depot->id + "' collides with a customer id");
}

ExpandedInstance expand_instance(const InstanceSpec& instance)
{
    validate(instance);
    ExpandedInstance out;
    out.fulfiller_count = instance.fulfiller_count;
    out.depot = instance.depot;
    out.customers = instance.customers;
    std::sort(out.customers.begin(), out.customers.end(),
              [](const Customer& a, const Customer& b) { return IdLess{}(a.id, b.id); });

    for (const Customer& c : out.customers) {
        const Partition parts = minimal_generator(c.demand, instance.fulfiller_count);
        auto& ids = out.provenance[c.id];
        for (std::size_t ordinal = 1; ordinal <= parts.size(); ++ordinal) {
            DemandCopy copy{c.id + "#" + std::to_string(ordinal), c.id, parts[ordinal - 1], c.attrs};
            ids.push_back(copy.copy_id);
            out.copies.push_back(std::move(copy));
        }
    }
    return out;
}

std::int64_t expansion_bound(const InstanceSpec& instance)
{
    validate(instance);
    std::int64_t total = 0;
    for (const Customer& c : instance.customers)
        total = checked_add(total, size_upper_bound(c.demand, instance.fulfiller_count));
    return total;
}

SplitAssignment recover_solution(const ExpandedInstance& expanded, const CopyAssignment& assignment)
{
    std::map<std::string, const DemandCopy*> by_id;
    for (const DemandCopy& copy : expanded.copies)
        by_id.emplace(copy.copy_id, &copy);

    for (const auto& [copy_id, service] : assignment)
        if (!by_id.contains(copy_id))
            throw InputError("assignment names unknown copy '" + copy_id + "'");

    SplitAssignment out;
    for (const DemandCopy& copy : expanded.copies) {
        const auto it = assignment.find(copy.copy_id);
        if (it == assignment.end())
            throw InputError("copy '" + copy.copy_id + "' is not assigned to any fulfiller");
        const CopyService& service = it->second;
        if (service.fulfiller.empty())
            throw InputError("copy '" + copy.copy_id + "' has an empty fulfiller id");
        if (service.amount != copy.demand)
            throw InputError("copy '" + copy.copy_id + "' has demand " + std::to_string(copy.demand)
                             + " but is served " + std::to_string(service.amount));
        Part& slot = out.entries[{copy.parent_id, service.fulfiller}];
        slot = checked_add(slot, service.amount);
    }

    std::map<std::string, Part, IdLess> fulfillers_per_customer;
    for (const auto& [key, amount] : out.entries)
        ++fulfillers_per_customer[key.customer];
    for (const auto& [customer, count] : fulfillers_per_customer)
        if (count > expanded.fulfiller_count)
            throw InputError("customer '" + customer + "' is served by " + std::to_string(count)
                             + " fulfillers, more than k = " + std::to_string(expanded.fulfiller_count));
    return out;
}

} // namespace partgen
