#ifndef KINKLAB_CONFIG_HPP
#define KINKLAB_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kinklab {

/** Raised for malformed files, bad values, or unknown keys (CLI exit code 2). */
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Flat key = value configuration: one assignment per line, '#' comments,
 * later assignments and command-line overrides win.
 */
class Config {
  public:
    Config() = default;

    static Config from_file(const std::string& path);
    void apply_override(const std::string& assignment); // "key=value"

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::string get_string(const std::string& key, const std::string& def) const;
    double get_double(const std::string& key, double def) const;
    int get_int(const std::string& key, int def) const;
    bool get_bool(const std::string& key, bool def) const;
    std::vector<double> get_list(const std::string& key) const; // comma separated

    /** Throws ConfigError when a key is neither known nor a tol_* override. */
    void require_known(const std::vector<std::string>& known) const;

    const std::map<std::string, std::string>& raw() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

} // namespace kinklab

#endif
