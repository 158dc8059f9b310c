#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace intake {

// Tensor shape as temporal frames x spatial height/width x channels.
// t == 1 for purely 2-D paths.
struct ShapeState {
    std::int64_t t = 1;
    std::int64_t h = 1;
    std::int64_t w = 1;
    std::int64_t c = 1;

    bool operator==(const ShapeState&) const = default;
};

enum class LayerKind {
    identity,          // placeholder row (e.g. conv0 on the frame stream)
    conv,              // 2-D conv is kt == st == 1
    pool,              // max pooling, same kt/st convention
    bottleneck_stage,  // repeated 1x1 -> 3x3 -> 1x1 residual blocks
    dense,
    lstm,
    flatten,           // folds h*w*c, keeps t (per-frame application)
    spatial_pool,      // global average over h, w
    temporal_pool,     // global average over t
};

struct LayerSpec {
    std::string name;
    LayerKind kind = LayerKind::identity;
    int kt = 1;  // kernel, temporal
    int ks = 1;  // kernel, spatial
    int st = 1;  // stride, temporal
    int ss = 1;  // stride, spatial
    int out_channels = 0;
    bool three_d = false;  // display only: print kernels/strides as TxS^2

    // bottleneck_stage: blocks of [kt_a x 1^2, mid; 1 x 3^2, mid; 1x1^2, 4*mid]
    // with a projection shortcut on the first block. block_st/ss apply to the
    // middle conv of the first block.
    int repeat = 1;
    int mid_channels = 0;
    int block_kt = 1;
    int block_st = 1;

    int units = 0;  // dense / lstm width

    bool bias = true;
    bool batchnorm = false;
};

// Time-strided conv taken from the fast pathway after layer `after_layer`,
// concatenated into the slow pathway input of its next conv-like layer.
struct LateralSpec {
    std::string name;
    std::size_t after_layer = 0;
    int kt = 3;
    int out_channels = 0;
    bool bias = true;
    bool batchnorm = false;
};

enum class FusionKind {
    none,
    concat_conv,          // channel concat followed by a 1x1 conv
    sum,                  // parameter-free elementwise sum
    pool_project_concat,  // global pool; second pathway first projected wider
};

struct FusionSpec {
    FusionKind kind = FusionKind::none;
    std::string name = "fusion";
    int out_channels = 0;  // concat_conv
    bool bias = true;
    bool batchnorm = false;
    bool temporal_pool_inputs = false;  // average T away before fusing
    bool include_final_lateral = false; // concat_conv also takes the last lateral
    // pool_project_concat: conv applied to the second pathway before pooling
    int proj_kt = 3;
    int proj_out = 0;
    bool proj_batchnorm = false;
};

struct PathwaySpec {
    std::string name;
    ShapeState input;
    std::vector<LayerSpec> layers;
};

// Declarative description of one model instantiation: 1 or 2 pathways, an
// optional fusion and lateral connections, and a shared head.
struct ArchSpec {
    std::string name;
    std::vector<PathwaySpec> pathways;
    std::vector<LateralSpec> laterals;  // pathway[1] -> pathway[0]
    FusionSpec fusion;
    std::vector<LayerSpec> head;
    std::int64_t reference_params = 0;  // published value for comparison
    // SlowFast factors, informational (already encoded in the pathway dims):
    // temporal stride ratio and fast/slow channel ratio.
    double alpha = 0.0;
    double beta = 0.0;
};

// One row of the analysis: a named layer with the shape it produces on each
// pathway that owns it, and its parameter cost.
struct LayerReport {
    std::string layer;
    std::string pathway;  // empty for fused/head rows
    std::string kernel;   // human-readable kernel/stride description
    ShapeState output;
    std::int64_t params = 0;
};

struct LayerShapes {
    std::string layer;
    std::vector<std::pair<std::string, ShapeState>> per_pathway;
};

// "TxHxWxC" with degenerate dims elided, matching the tables' style.
std::string to_string(const ShapeState& shape);

// Known instantiation names accepted by builtin_arch.
const std::vector<std::string>& builtin_arch_names();

// Returns the declarative spec for one of the built-in instantiations;
// rejects unknown names, listing the valid ones.
ArchSpec builtin_arch(const std::string& name);

// Full walk: shapes and parameter counts per layer, in table order
// (data rows, trunk rows, fusion, head).
std::vector<LayerReport> analyze_arch(const ArchSpec& spec);

// Same-padding shape propagation, out = ceil(in / stride). Rejects invalid
// layers naming the offender.
std::vector<LayerShapes> propagate_shapes(const ArchSpec& spec);

// Total learnable parameters: conv kt*ks^2*Cin*Cout (+Cout bias), batchnorm
// 2C, dense in*out+out, lstm 4*((in+h)*h+h), pools/flatten free.
std::int64_t count_params(const ArchSpec& spec);

} // namespace intake
