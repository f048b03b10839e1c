// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <txsize/spec_string.h>

#include <txsize/errors.h>

#include <charconv>
#include <map>
#include <optional>

namespace txsize {
namespace {

constexpr uint64_t MAX_REPEAT{100'000};

const char* const VALID_INPUTS =
    "p2pk, p2pkh, p2wpkh, p2sh-p2wpkh, p2tr, ms:M/N, p2sh-ms:M/N, p2sh-p2wsh-ms:M/N, p2wsh-ms:M/N, "
    "p2tr-script:items=I,data=D,script=S,depth=K";
const char* const VALID_OUTPUTS =
    "p2pk, p2pkh, p2wpkh, p2sh, p2wsh, p2tr, ms:M/N, nulldata:LEN (script-hash input kinds map to their output)";

[[noreturn]] void Fail(const std::string& token, const std::string& why)
{
    throw InvalidSpecError("invalid descriptor '" + token + "': " + why);
}

uint64_t ParseNumber(const std::string& token, const std::string& text)
{
    uint64_t value{0};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        Fail(token, "'" + text + "' is not a non-negative integer");
    }
    return value;
}

uint32_t ParseNumber32(const std::string& token, const std::string& text)
{
    const uint64_t v = ParseNumber(token, text);
    if (v > 0xffffffff) Fail(token, "'" + text + "' is out of range");
    return static_cast<uint32_t>(v);
}

struct Split {
    std::string base;
    uint64_t count{1};
};

Split SplitRepeat(const std::string& token)
{
    const auto x = token.rfind('x');
    if (x != std::string::npos && x + 1 < token.size() && x > 0 &&
        token.find_first_not_of("0123456789", x + 1) == std::string::npos) {
        const uint64_t count = ParseNumber(token, token.substr(x + 1));
        if (count < 1 || count > MAX_REPEAT) Fail(token, "repeat count must be between 1 and 100000");
        return {token.substr(0, x), count};
    }
    return {token, 1};
}

/** Splits "name:args" */
std::pair<std::string, std::optional<std::string>> SplitArgs(const std::string& base)
{
    const auto colon = base.find(':');
    if (colon == std::string::npos) return {base, std::nullopt};
    return {base.substr(0, colon), base.substr(colon + 1)};
}

std::pair<uint32_t, uint32_t> ParseMN(const std::string& token, const std::optional<std::string>& args)
{
    if (!args) Fail(token, "expected M/N");
    const auto slash = args->find('/');
    if (slash == std::string::npos) Fail(token, "expected M/N");
    return {ParseNumber32(token, args->substr(0, slash)), ParseNumber32(token, args->substr(slash + 1))};
}

TaprootScriptShape ParseTaprootShape(const std::string& token, const std::optional<std::string>& args)
{
    if (!args) Fail(token, "expected items=I,data=D,script=S,depth=K");
    std::map<std::string, std::string> kv;
    std::size_t pos{0};
    while (pos <= args->size()) {
        auto comma = args->find(',', pos);
        if (comma == std::string::npos) comma = args->size();
        const std::string field = args->substr(pos, comma - pos);
        const auto eq = field.find('=');
        if (eq == std::string::npos) Fail(token, "field '" + field + "' is not key=value");
        if (!kv.emplace(field.substr(0, eq), field.substr(eq + 1)).second) {
            Fail(token, "duplicate field '" + field.substr(0, eq) + "'");
        }
        pos = comma + 1;
    }
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    TaprootScriptShape shape;
    const auto script = take("script");
    const auto depth = take("depth");
    if (!script || !depth) Fail(token, "script= and depth= are required");
    shape.script_len = ParseNumber(token, *script);
    shape.merkle_depth = ParseNumber32(token, *depth);

    if (auto lens = take("lens")) {
        std::vector<uint64_t> lengths;
        std::size_t p{0};
        while (p <= lens->size()) {
            auto slash = lens->find('/', p);
            if (slash == std::string::npos) slash = lens->size();
            lengths.push_back(ParseNumber(token, lens->substr(p, slash - p)));
            p = slash + 1;
        }
        if (kv.count("items") || kv.count("data")) Fail(token, "lens= excludes items= and data=");
        shape = TaprootScriptShape::WithItems(std::move(lengths), shape.script_len, shape.merkle_depth);
    } else {
        const auto items = take("items");
        const auto data = take("data");
        if (!items || !data) Fail(token, "items= and data= (or lens=) are required");
        shape.stack_items = ParseNumber32(token, *items);
        shape.stack_data_len = ParseNumber(token, *data);
    }
    if (!kv.empty()) Fail(token, "unknown field '" + kv.begin()->first + "'");
    return shape;
}

} // namespace

std::vector<InputSpec> ParseInputSpec(const std::string& token)
{
    const Split split = SplitRepeat(token);
    const auto [name, args] = SplitArgs(split.base);

    InputSpec spec;
    if (name == "p2pk") spec = InputSpec::Simple(InputType::P2PK);
    else if (name == "p2pkh") spec = InputSpec::Simple(InputType::P2PKH);
    else if (name == "p2wpkh") spec = InputSpec::Simple(InputType::P2WPKH);
    else if (name == "p2sh-p2wpkh") spec = InputSpec::Simple(InputType::P2SH_P2WPKH);
    else if (name == "p2tr") spec = InputSpec::Simple(InputType::P2TR_KEYPATH);
    else if (name == "ms" || name == "p2sh-ms" || name == "p2sh-p2wsh-ms" || name == "p2wsh-ms") {
        const InputType type = name == "ms"        ? InputType::BARE_MS
                               : name == "p2sh-ms" ? InputType::P2SH_MS
                               : name == "p2wsh-ms" ? InputType::P2WSH_MS
                                                    : InputType::P2SH_P2WSH_MS;
        const auto [m, n] = ParseMN(token, args);
        spec = InputSpec::Multisig(type, m, n);
    } else if (name == "p2tr-script") {
        spec = InputSpec::TaprootScript(ParseTaprootShape(token, args));
    } else {
        Fail(token, std::string{"unknown input kind; valid kinds: "} + VALID_INPUTS);
    }
    if (!IsMultisig(spec.type) && spec.type != InputType::P2TR_SCRIPTPATH && args) {
        Fail(token, "'" + name + "' takes no parameters");
    }
    try {
        CheckInputSpec(spec);
    } catch (const InvalidSpecError& e) {
        Fail(token, e.what());
    }
    return std::vector<InputSpec>(split.count, spec);
}

std::vector<OutputSpec> ParseOutputSpec(const std::string& token)
{
    const Split split = SplitRepeat(token);
    const auto [name, args] = SplitArgs(split.base);

    OutputSpec spec;
    bool takes_args{false};
    if (name == "p2pk") spec = OutputSpec::Simple(OutputType::P2PK);
    else if (name == "p2pkh") spec = OutputSpec::Simple(OutputType::P2PKH);
    else if (name == "p2wpkh") spec = OutputSpec::Simple(OutputType::P2WPKH);
    else if (name == "p2sh" || name == "p2sh-p2wpkh") spec = OutputSpec::Simple(OutputType::P2SH);
    else if (name == "p2wsh") spec = OutputSpec::Simple(OutputType::P2WSH);
    else if (name == "p2tr") spec = OutputSpec::Simple(OutputType::P2TR);
    else if (name == "p2sh-ms" || name == "p2sh-p2wsh-ms") {
        ParseMN(token, args);
        spec = OutputSpec::Simple(OutputType::P2SH);
        takes_args = true;
    } else if (name == "p2wsh-ms") {
        ParseMN(token, args);
        spec = OutputSpec::Simple(OutputType::P2WSH);
        takes_args = true;
    } else if (name == "p2tr-script") {
        ParseTaprootShape(token, args);
        spec = OutputSpec::Simple(OutputType::P2TR);
        takes_args = true;
    } else if (name == "ms") {
        const auto [m, n] = ParseMN(token, args);
        spec = OutputSpec::BareMultisig(m, n);
        takes_args = true;
    } else if (name == "nulldata") {
        if (!args) Fail(token, "expected nulldata:LEN");
        spec = OutputSpec::NullData(ParseNumber(token, *args));
        takes_args = true;
    } else {
        Fail(token, std::string{"unknown output kind; valid kinds: "} + VALID_OUTPUTS);
    }
    if (!takes_args && args) Fail(token, "'" + name + "' takes no parameters");
    if (spec.type == OutputType::BARE_MS) {
        try {
            CheckOutputSpec(spec);
        } catch (const InvalidSpecError& e) {
            Fail(token, e.what());
        }
    }
    return std::vector<OutputSpec>(split.count, spec);
}

EcdsaSigModel ParseSigModel(const std::string& text)
{
    if (text == "average") return EcdsaSigModel{EcdsaSigModel::Kind::AVERAGE};
    if (text == "low-r") return EcdsaSigModel{EcdsaSigModel::Kind::LOW_R};
    if (text == "low-s") return EcdsaSigModel{EcdsaSigModel::Kind::LOW_S_ONLY};
    if (text == "legacy" || text == "conservative") return EcdsaSigModel{EcdsaSigModel::Kind::LEGACY};
    if (text.rfind("fixed:", 0) == 0) {
        const std::string k = text.substr(6);
        uint32_t bytes{0};
        auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), bytes);
        if (k.empty() || ec != std::errc{} || ptr != k.data() + k.size()) {
            throw InvalidModelError("invalid signature model '" + text + "'");
        }
        return EcdsaSigModel::Fixed(bytes);
    }
    throw InvalidModelError("unknown signature model '" + text + "'; valid: average, low-r, low-s, legacy, conservative, fixed:K");
}

PubKeyEncoding ParsePubKeyEncoding(const std::string& text)
{
    if (text == "compressed") return PubKeyEncoding::COMPRESSED_SEC;
    if (text == "uncompressed") return PubKeyEncoding::UNCOMPRESSED_SEC;
    if (text == "xonly") return PubKeyEncoding::XONLY;
    throw InvalidModelError("unknown public key encoding '" + text + "'; valid: compressed, uncompressed, xonly");
}

SchnorrSighash ParseSchnorrSighash(const std::string& text)
{
    if (text == "default") return SchnorrSighash::DEFAULT;
    if (text == "custom") return SchnorrSighash::CUSTOM;
    throw InvalidModelError("unknown schnorr sighash mode '" + text + "'; valid: default, custom");
}

} // namespace txsize
