// model.hpp
#ifndef METRISCOPE_MODEL_HPP
#define METRISCOPE_MODEL_HPP

#pragma once

#include "metriscope/cfg.hpp"
#include "metriscope/halstead.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace metriscope {

enum class Visibility { Public, Protected, Private, Default };
enum class ClassKind { Class, Interface, AbstractClass };

std::string_view to_string(Visibility v);
std::string_view to_string(ClassKind k);
std::optional<Visibility> visibility_from_string(std::string_view s);
std::optional<ClassKind> class_kind_from_string(std::string_view s);

/// Strips generic arguments, array brackets and varargs dots:
/// "Map<String, List<Foo>>[]" -> "Map".
std::string erase_type(std::string_view type_ref);

struct AttributeInfo {
    std::string name;
    std::string declared_type;
    Visibility visibility = Visibility::Default;
    bool is_static = false;

    bool operator==(const AttributeInfo &) const = default;
};

/// One statically invoked method, keyed the way the facts file writes it:
/// "Receiver.method(T1,T2)". A receiver of "?" means the static type could
/// not be determined; a parameter type of "?" matches any declared type.
struct Invocation {
    std::string target_class;
    std::string method;
    std::vector<std::string> argument_types;
    int multiplicity = 1;

    std::string target() const;
    /// Parses "Class.method(sig)"; the class part may itself contain dots.
    static std::optional<Invocation> parse(std::string_view target, int count);

    bool operator==(const Invocation &) const = default;
};

struct MethodInfo {
    std::string name;
    std::vector<std::string> parameter_types;
    Visibility visibility = Visibility::Default;
    bool is_abstract = false;
    bool is_static = false;
    /// "Class.attr" references, sorted and unique.
    std::vector<std::string> accessed_attributes;
    std::vector<Invocation> invocations;
    std::optional<ControlFlowGraph> cfg;
    bool is_inherited_copy = false;

    // Optional measurements a producer may attach.
    std::optional<int> statements;
    std::optional<int> lines;
    std::optional<HalsteadCounts> halstead;

    /// "name(T1,T2)" with erased parameter types.
    std::string signature() const;

    bool operator==(const MethodInfo &) const = default;
};

struct ClassInfo {
    std::string name;
    ClassKind kind = ClassKind::Class;
    std::vector<std::string> superclasses;
    std::vector<MethodInfo> methods;
    std::vector<AttributeInfo> attributes;
    int line_count = 0;
    int comment_lines = 0;
    bool is_external = false;

    std::optional<std::string> file;
    int initializer_statements = 0;

    std::string simple_name() const;
    std::string package_name() const;
    bool is_constructor(const MethodInfo &m) const { return m.name == simple_name(); }
    const AttributeInfo *find_attribute(std::string_view attr) const;

    bool operator==(const ClassInfo &) const = default;
};

/// A method invocation after resolution against the model.
struct ResolvedCall {
    /// Static receiver type, when it names a model class (system or stub).
    std::optional<std::string> receiver;
    /// Class that declares the invoked method, when found.
    std::optional<std::string> declaring_class;
    /// Distinctness key "Class.name(sig)" used for response sets.
    std::string key;
};

/// Immutable graph of classes and their relations. Every query that takes a
/// class name throws UnknownClass for names absent from the model.
class SystemModel {
public:
    const ClassInfo &get(std::string_view name) const;
    const ClassInfo *find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name) != nullptr; }
    bool is_system(std::string_view name) const;

    /// Non-external class names, sorted.
    const std::vector<std::string> &system_classes() const { return system_; }
    /// All classes including external stubs, sorted.
    std::vector<std::string> all_classes() const;
    std::size_t total_classes() const { return system_.size(); }

    const std::optional<std::string> &baseline_id() const { return baseline_id_; }

    /// Maps a type reference written inside `context` onto a model class name.
    /// Primitive types and empty references yield nullopt.
    std::optional<std::string> resolve_type(std::string_view type_ref, std::string_view context) const;
    /// As resolve_type, but only non-external classes.
    std::optional<std::string> resolve_system_type(std::string_view type_ref, std::string_view context) const;

    /// Resolved direct parents (system classes and external stubs).
    const std::vector<std::string> &parents(std::string_view c) const;
    /// Direct system children, sorted.
    const std::vector<std::string> &children(std::string_view c) const;
    /// Transitive system superclasses, nearest first.
    const std::vector<std::string> &ancestors(std::string_view c) const;
    /// Number of distinct external stubs reachable through the parent relation.
    int external_depth(std::string_view c) const;
    /// Transitive system subclasses, sorted.
    const std::vector<std::string> &descendants(std::string_view c) const;

    /// Directional use relation between two system classes.
    bool uses(std::string_view c, std::string_view d) const;
    const std::set<std::string> &used_classes(std::string_view c) const;
    const std::set<std::string> &user_classes(std::string_view c) const;

    ResolvedCall resolve_call(std::string_view c, const Invocation &inv) const;
    /// (declaring class, attribute name) for an "X.attr" reference made in c.
    std::optional<std::pair<std::string, std::string>> resolve_access(std::string_view c,
                                                                      std::string_view ref) const;

    /// Methods available to c from its ancestors and not redefined in c
    /// (constructors and private members excluded), tagged is_inherited_copy.
    std::vector<MethodInfo> inherited_methods(std::string_view c) const;
    std::vector<AttributeInfo> inherited_attributes(std::string_view c) const;
    /// True when m (declared in c) redefines a visible ancestor method.
    bool overrides(std::string_view c, const MethodInfo &m) const;

    /// Non-external classes in the facts form they were built from.
    std::vector<ClassInfo> facts() const;

    bool operator==(const SystemModel &other) const;

private:
    friend SystemModel build_system_model(std::vector<ClassInfo> classes,
                                          std::optional<std::string> baseline_id);

    struct Relations {
        std::vector<std::string> parents;
        std::vector<std::string> children;
        std::vector<std::string> ancestors;
        std::vector<std::string> descendants;
        int external_depth = 0;
        std::set<std::string> uses;
        std::set<std::string> users;
    };

    const Relations &rel(std::string_view c) const;
    std::optional<std::pair<std::string, const MethodInfo *>>
    find_method(std::string_view cls, const Invocation &inv) const;

    std::map<std::string, ClassInfo, std::less<>> classes_;
    std::map<std::string, Relations, std::less<>> relations_;
    std::multimap<std::string, std::string, std::less<>> by_simple_name_;
    std::vector<std::string> system_;
    std::optional<std::string> baseline_id_;
};

/// Resolves references, creates external stubs, computes the inheritance
/// closure and the use relation. Throws DuplicateClass or InheritanceCycle.
SystemModel build_system_model(std::vector<ClassInfo> classes,
                               std::optional<std::string> baseline_id = std::nullopt);

} // namespace metriscope

#endif // METRISCOPE_MODEL_HPP
