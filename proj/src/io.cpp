#include "partgen/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "partgen/generator.hpp"

namespace partgen::io {

namespace {

const json& field(const json& j, const char* key, const char* context)
{
    if (!j.is_object())
        throw InputError(std::string(context) + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end())
        throw InputError(std::string(context) + ": missing field '" + key + "'");
    return *it;
}

Part as_integer(const json& v, const std::string& what)
{
    if (v.is_number_float())
        throw InputError(what + " must be integral, got " + v.dump());
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<Part>::max()))
            throw InputError(what + " exceeds the 64-bit range");
        return static_cast<Part>(u);
    }
    if (!v.is_number_integer())
        throw InputError(what + " must be an integer, got " + v.dump());
    return v.get<Part>();
}

std::uint64_t as_count(const json& v, const std::string& what)
{
    const Part value = as_integer(v, what);
    if (value < 0)
        throw InputError(what + " must be nonnegative");
    return static_cast<std::uint64_t>(value);
}

std::string as_string(const json& v, const std::string& what)
{
    if (!v.is_string())
        throw InputError(what + " must be a string, got " + v.dump());
    return v.get<std::string>();
}

Attributes attrs_of(const json& j, const char* context)
{
    const auto it = j.find("attrs");
    if (it == j.end() || it->is_null())
        return Attributes::object();
    if (!it->is_object())
        throw InputError(std::string(context) + ": 'attrs' must be an object");
    return *it;
}

json customers_to_json(const std::vector<Customer>& customers)
{
    json out = json::array();
    for (const Customer& c : customers)
        out.push_back({{"id", c.id}, {"demand", c.demand}, {"attrs", c.attrs}});
    return out;
}

std::vector<Customer> customers_from_json(const json& j)
{
    const json& list = field(j, "customers", "instance");
    if (!list.is_array())
        throw InputError("instance: 'customers' must be an array");
    std::vector<Customer> out;
    for (const json& c : list) {
        Customer customer;
        customer.id = as_string(field(c, "id", "customer"), "customer id");
        customer.demand = as_integer(field(c, "demand", "customer"), "demand of '" + customer.id + "'");
        customer.attrs = attrs_of(c, "customer");
        out.push_back(std::move(customer));
    }
    return out;
}

std::optional<Depot> depot_from_json(const json& j)
{
    const auto it = j.find("depot");
    if (it == j.end() || it->is_null())
        return std::nullopt;
    return Depot{as_string(field(*it, "id", "depot"), "depot id"), attrs_of(*it, "depot")};
}

void put_depot(json& out, const std::optional<Depot>& depot)
{
    if (depot)
        out["depot"] = {{"id", depot->id}, {"attrs", depot->attrs}};
}

VerifyMode mode_from_string(const std::string& s)
{
    if (s == "greedy-first")
        return VerifyMode::greedy_first;
    if (s == "exact-only")
        return VerifyMode::exact_only;
    throw InputError("unknown verification mode '" + s + "'");
}

Outcome outcome_from_string(const std::string& s)
{
    if (s == "pass")
        return Outcome::pass;
    if (s == "fail")
        return Outcome::fail;
    if (s == "inconclusive")
        return Outcome::inconclusive;
    throw InputError("unknown outcome '" + s + "'");
}

} // namespace

json to_json(const Partition& p)
{
    return {{"parts", p.values()}, {"weight", p.weight()}, {"size", p.size()}};
}

Partition partition_from_json(const json& j)
{
    const json& parts = field(j, "parts", "partition");
    if (!parts.is_array())
        throw InputError("partition: 'parts' must be an array");
    std::vector<Part> values;
    for (const json& v : parts)
        values.push_back(as_integer(v, "partition part"));
    Partition p(std::move(values));
    if (const auto w = j.find("weight"); w != j.end() && as_integer(*w, "weight") != p.weight())
        throw InputError("partition: 'weight' disagrees with the parts");
    if (const auto s = j.find("size"); s != j.end() && as_count(*s, "size") != p.size())
        throw InputError("partition: 'size' disagrees with the parts");
    return p;
}

json to_json(const GenerationPlan& plan)
{
    return {{"source", to_json(plan.source)}, {"target", to_json(plan.target)}, {"assignment", plan.assignment}};
}

GenerationPlan plan_from_json(const json& j)
{
    GenerationPlan plan{partition_from_json(field(j, "source", "plan")),
                        partition_from_json(field(j, "target", "plan")),
                        {}};
    const json& assignment = field(j, "assignment", "plan");
    if (!assignment.is_array())
        throw InputError("plan: 'assignment' must be an array");
    for (const json& v : assignment)
        plan.assignment.push_back(static_cast<std::size_t>(as_count(v, "assignment entry")));
    if (!is_valid_plan(plan))
        throw InputError("plan: assignment does not generate the target");
    return plan;
}

json to_json(const GreedyTrace& trace)
{
    json steps = json::array();
    for (const GreedyStep& s : trace.steps)
        steps.push_back({{"part_index", s.part_index}, {"target_index", s.target_index}, {"remaining", s.remaining}});
    json out{{"steps", steps}, {"remaining_at_stop", trace.remaining_at_stop}};
    out["stuck_part"] = trace.stuck_part ? json(*trace.stuck_part) : json(nullptr);
    return out;
}

json to_json(const VerificationReport& report)
{
    json out{{"subject", to_json(report.subject)},
             {"n", report.n},
             {"k", report.k},
             {"mode", std::string(to_string(report.mode))},
             {"outcome", std::string(to_string(report.outcome))},
             {"partitions_checked", report.partitions_checked},
             {"nodes_expanded", report.nodes_expanded}};
    out["counterexample"] = report.counterexample ? to_json(*report.counterexample) : json(nullptr);
    return out;
}

VerificationReport report_from_json(const json& j)
{
    VerificationReport r{partition_from_json(field(j, "subject", "report")),
                         as_integer(field(j, "n", "report"), "n"),
                         as_integer(field(j, "k", "report"), "k"),
                         mode_from_string(as_string(field(j, "mode", "report"), "mode")),
                         outcome_from_string(as_string(field(j, "outcome", "report"), "outcome")),
                         std::nullopt,
                         as_count(field(j, "partitions_checked", "report"), "partitions_checked"),
                         as_count(field(j, "nodes_expanded", "report"), "nodes_expanded")};
    if (const auto c = j.find("counterexample"); c != j.end() && !c->is_null())
        r.counterexample = partition_from_json(*c);
    if ((r.outcome == Outcome::fail) != r.counterexample.has_value())
        throw InputError("report: a counterexample must be present exactly when the outcome is fail");
    return r;
}

json to_json(const InstanceSpec& instance)
{
    json out{{"k", instance.fulfiller_count}, {"customers", customers_to_json(instance.customers)}};
    put_depot(out, instance.depot);
    return out;
}

InstanceSpec instance_from_json(const json& j)
{
    InstanceSpec instance{customers_from_json(j), as_integer(field(j, "k", "instance"), "k"), depot_from_json(j)};
    validate(instance);
    return instance;
}

json to_json(const ExpandedInstance& expanded)
{
    json copies = json::array();
    for (const DemandCopy& c : expanded.copies)
        copies.push_back({{"copy_id", c.copy_id}, {"parent_id", c.parent_id}, {"demand", c.demand}, {"attrs", c.attrs}});
    json out{{"k", expanded.fulfiller_count},
             {"customers", customers_to_json(expanded.customers)},
             {"copies", copies}};
    put_depot(out, expanded.depot);
    return out;
}

ExpandedInstance expanded_from_json(const json& j)
{
    InstanceSpec base{customers_from_json(j), as_integer(field(j, "k", "expanded instance"), "k"), depot_from_json(j)};
    validate(base);

    ExpandedInstance out;
    out.customers = base.customers;
    out.fulfiller_count = base.fulfiller_count;
    out.depot = base.depot;

    std::map<std::string, Part> demand_of;
    for (const Customer& c : base.customers)
        demand_of[c.id] = c.demand;

    const json& copies = field(j, "copies", "expanded instance");
    if (!copies.is_array())
        throw InputError("expanded instance: 'copies' must be an array");
    std::set<std::string> copy_ids;
    std::map<std::string, std::vector<Part>> parts_of;
    for (const json& c : copies) {
        DemandCopy copy;
        copy.copy_id = as_string(field(c, "copy_id", "copy"), "copy_id");
        copy.parent_id = as_string(field(c, "parent_id", "copy"), "parent_id");
        copy.demand = as_integer(field(c, "demand", "copy"), "demand of copy '" + copy.copy_id + "'");
        copy.attrs = attrs_of(c, "copy");
        if (!copy_ids.insert(copy.copy_id).second)
            throw InputError("duplicate copy id '" + copy.copy_id + "'");
        if (!demand_of.contains(copy.parent_id))
            throw InputError("copy '" + copy.copy_id + "' names unknown parent '" + copy.parent_id + "'");
        if (copy.demand < 1)
            throw InputError("copy '" + copy.copy_id + "' has non-positive demand");
        parts_of[copy.parent_id].push_back(copy.demand);
        out.provenance[copy.parent_id].push_back(copy.copy_id);
        out.copies.push_back(std::move(copy));
    }
    for (const auto& [id, demand] : demand_of) {
        const auto it = parts_of.find(id);
        if (it == parts_of.end())
            throw InputError("customer '" + id + "' has no copies");
        if (Partition(it->second) != minimal_generator(demand, out.fulfiller_count))
            throw InputError("copies of '" + id + "' do not match the minimal generator of its demand");
    }
    return out;
}

json to_json(const CopyAssignment& assignment)
{
    json out = json::array();
    for (const auto& [copy_id, service] : assignment)
        out.push_back({{"copy_id", copy_id}, {"fulfiller", service.fulfiller}, {"amount", service.amount}});
    return out;
}

CopyAssignment assignment_from_json(const json& j)
{
    if (!j.is_array())
        throw InputError("copy assignment: expected an array");
    CopyAssignment out;
    for (const json& e : j) {
        const std::string copy_id = as_string(field(e, "copy_id", "assignment"), "copy_id");
        CopyService service{as_string(field(e, "fulfiller", "assignment"), "fulfiller"),
                            as_integer(field(e, "amount", "assignment"), "amount")};
        if (!out.emplace(copy_id, std::move(service)).second)
            throw InputError("copy '" + copy_id + "' is assigned more than once");
    }
    return out;
}

json to_json(const SplitAssignment& split, Part k)
{
    json rows = json::array();
    for (const auto& [key, amount] : split.entries)
        rows.push_back({{"customer", key.customer}, {"fulfiller", key.fulfiller}, {"amount", amount}});
    return {{"k", k}, {"assignments", rows}};
}

SplitAssignment split_from_json(const json& j)
{
    const json& rows = field(j, "assignments", "split assignment");
    if (!rows.is_array())
        throw InputError("split assignment: 'assignments' must be an array");
    SplitAssignment out;
    for (const json& r : rows) {
        CustomerFulfiller key{as_string(field(r, "customer", "assignment"), "customer"),
                              as_string(field(r, "fulfiller", "assignment"), "fulfiller")};
        const Part amount = as_integer(field(r, "amount", "assignment"), "amount");
        if (amount < 0)
            throw InputError("split assignment amounts must be nonnegative");
        if (!out.entries.emplace(std::move(key), amount).second)
            throw InputError("split assignment repeats a (customer, fulfiller) pair");
    }
    return out;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw InputError("failed writing '" + path + "'");
}

} // namespace partgen::io
