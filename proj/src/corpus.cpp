#include "qoracle/corpus.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "qoracle/qasm.hpp"

namespace qoracle {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw StructuralError("cannot open '" + path.string() + "'");
  }
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw StructuralError("cannot write '" + path.string() + "'");
  }
  out << body;
}

}  // namespace

std::filesystem::path corpus_subdir(const std::filesystem::path& root) {
  return root / "corpus";
}

std::filesystem::path failures_subdir(const std::filesystem::path& root) {
  return root / "failures";
}

void save_corpus_circuit(const std::filesystem::path& root,
                         const std::string& name, const Circuit& circuit) {
  std::filesystem::create_directories(corpus_subdir(root));
  write_file(corpus_subdir(root) / (name + ".qasm"), emit_qasm(circuit));
}

void save_failure(const std::filesystem::path& root,
                  const FailureRecord& record, const Circuit& circuit) {
  std::filesystem::create_directories(failures_subdir(root));
  write_file(failures_subdir(root) / (record.id + ".qasm"),
             emit_qasm(circuit));

  nlohmann::json meta;
  meta["id"] = record.id;
  meta["seed"] = record.seed;
  meta["trial"] = record.trial;
  meta["mutant_id"] = record.mutant.mutant_id;
  meta["mutant_parameters"] = record.mutant.parameters;
  meta["oracle_id"] = to_string(record.oracle_id);
  meta["measured"] = record.measured;
  meta["message"] = record.message;
  write_file(failures_subdir(root) / (record.id + ".json"), meta.dump(2) + "\n");
}

FailureRecord load_failure(const std::filesystem::path& root,
                           const std::string& id, Circuit* circuit) {
  const auto meta_path = failures_subdir(root) / (id + ".json");
  if (!std::filesystem::exists(meta_path)) {
    throw StructuralError("unknown failure id '" + id + "'");
  }

  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(read_file(meta_path));
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError("corrupt failure metadata '" + meta_path.string() +
                          "': " + e.what());
  }

  FailureRecord record;
  try {
    record.id = meta.at("id").get<std::string>();
    record.seed = meta.at("seed").get<std::uint64_t>();
    record.trial = meta.at("trial").get<int>();
    record.mutant.mutant_id = meta.at("mutant_id").get<std::string>();
    record.mutant.parameters =
        meta.at("mutant_parameters").get<std::map<std::string, std::string>>();
    record.oracle_id =
        oracle_id_from_string(meta.at("oracle_id").get<std::string>());
    record.measured =
        meta.at("measured").get<std::map<std::string, Real>>();
    record.message = meta.at("message").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError("corrupt failure metadata '" + meta_path.string() +
                          "': " + e.what());
  }

  if (circuit != nullptr) {
    *circuit = parse_qasm(read_file(failures_subdir(root) / (id + ".qasm")));
  }
  return record;
}

std::vector<std::string> list_failures(const std::filesystem::path& root) {
  std::vector<std::string> ids;
  const auto dir = failures_subdir(root);
  if (!std::filesystem::exists(dir)) return ids;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") {
      ids.push_back(entry.path().stem().string());
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace qoracle
