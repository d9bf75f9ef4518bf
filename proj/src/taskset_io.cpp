#include "dgsched/taskset_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dgsched {

namespace {

using json = nlohmann::ordered_json;

Rational time_from_json(const json& value, const std::string& where)
{
    if (value.is_string())
        return rational_from_string(value.get<std::string>());
    if (value.is_number_integer()) {
        if (value.is_number_unsigned())
            return Rational(mpz_class(std::to_string(value.get<std::uint64_t>())));
        return Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
    }
    if (value.is_array() && value.size() == 2) {
        auto part = [&](const json& p) -> mpz_class {
            if (p.is_string())
                return mpz_class(p.get<std::string>());
            if (p.is_number_integer()) {
                if (p.is_number_unsigned())
                    return mpz_class(std::to_string(p.get<std::uint64_t>()));
                return mpz_class(std::to_string(p.get<std::int64_t>()));
            }
            throw std::invalid_argument(where + ": fraction parts must be integers");
        };
        mpz_class num = part(value[0]);
        mpz_class den = part(value[1]);
        if (den == 0)
            throw std::invalid_argument(where + ": zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    // Non-integer JSON numbers would require binary-float interpretation;
    // the format demands exact values.
    throw std::invalid_argument(where + ": time values must be decimal strings, "
                                "integers, or [num, den] pairs");
}

json time_to_json(const Rational& value)
{
    if (auto dec = decimal_string(value))
        return json(*dec);
    json pair = json::array();
    if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p()) {
        pair.push_back(value.get_num().get_si());
        pair.push_back(value.get_den().get_si());
    } else {
        pair.push_back(value.get_num().get_str());
        pair.push_back(value.get_den().get_str());
    }
    return pair;
}

} // namespace

TaskSet taskset_from_json(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("task-set JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("tasks") || !doc["tasks"].is_array())
        throw std::invalid_argument("task-set JSON: expected object with a \"tasks\" array");

    std::vector<TaskInput> inputs;
    for (const json& jt : doc["tasks"]) {
        if (!jt.is_object())
            throw std::invalid_argument("task-set JSON: task entries must be objects");
        TaskInput in;
        if (!jt.contains("id") || !jt["id"].is_number_integer())
            throw std::invalid_argument("task-set JSON: task without integer id");
        in.id = jt["id"].get<int>();
        std::string where = "task " + std::to_string(in.id);
        in.c1 = time_from_json(jt.at("c1"), where + " c1");
        in.a1 = time_from_json(jt.at("a1"), where + " a1");
        in.c2 = time_from_json(jt.at("c2"), where + " c2");
        if (jt.contains("semaphore") && !jt["semaphore"].is_null()) {
            if (!jt["semaphore"].is_string())
                throw std::invalid_argument(where + ": semaphore must be a string");
            in.semaphore = jt["semaphore"].get<std::string>();
        }
        inputs.push_back(std::move(in));
    }

    std::optional<TimeValue> deadline;
    if (doc.contains("deadline") && !doc["deadline"].is_null())
        deadline = time_from_json(doc["deadline"], "deadline");
    return TaskSet(inputs, deadline);
}

TaskSet load_taskset(std::istream& in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    return taskset_from_json(buf.str());
}

TaskSet load_taskset_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open task-set file: " + path);
    return load_taskset(in);
}

std::string taskset_to_json(const TaskSet& tasks)
{
    json doc;
    doc["tasks"] = json::array();
    for (const Task& t : tasks.tasks()) {
        json jt;
        jt["id"] = t.id;
        jt["c1"] = time_to_json(t.c1);
        jt["a1"] = time_to_json(t.a1);
        jt["c2"] = time_to_json(t.c2);
        if (t.semaphore)
            jt["semaphore"] = tasks.semaphore_name(*t.semaphore);
        doc["tasks"].push_back(std::move(jt));
    }
    if (tasks.deadline())
        doc["deadline"] = time_to_json(*tasks.deadline());
    return doc.dump(2) + "\n";
}

} // namespace dgsched
