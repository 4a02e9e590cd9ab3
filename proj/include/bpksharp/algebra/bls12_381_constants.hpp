// Copyright 2026 The bpksharp Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tests/oracle/gen_constants.py. Do not edit by hand.
// Field constants are in Montgomery form (little-endian u64 limbs).
#pragma once

#include <cstdint>

namespace bpksharp::ff::consts {

inline constexpr std::uint64_t kFpMod[6] = {0xb9feffffffffaaabull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull};
inline constexpr std::uint64_t kFpR1[6] = {0x760900000002fffdull, 0xebf4000bc40c0002ull, 0x5f48985753c758baull, 0x77ce585370525745ull, 0x5c071a97a256ec6dull, 0x15f65ec3fa80e493ull};
inline constexpr std::uint64_t kFpR2[6] = {0xf4df1f341c341746ull, 0x0a76e6a609d104f1ull, 0x8de5476c4c95b6d5ull, 0x67eb88a9939d83c0ull, 0x9a793e85b519952dull, 0x11988fe592cae3aaull};
inline constexpr std::uint64_t kFpInv = 0x89f3fffcfffcfffdull;

inline constexpr std::uint64_t kFrMod[4] = {0xffffffff00000001ull, 0x53bda402fffe5bfeull, 0x3339d80809a1d805ull, 0x73eda753299d7d48ull};
inline constexpr std::uint64_t kFrR1[4] = {0x00000001fffffffeull, 0x5884b7fa00034802ull, 0x998c4fefecbc4ff5ull, 0x1824b159acc5056full};
inline constexpr std::uint64_t kFrR2[4] = {0xc999e990f3f29c6dull, 0x2b6cedcb87925c23ull, 0x05d314967254398full, 0x0748d9d99f59ff11ull};
inline constexpr std::uint64_t kFrInv = 0xfffffffeffffffffull;

// Big-endian exponents for Fermat / Euler / Tonelli style powmod.
inline constexpr std::uint8_t kFpMinus2[48] = {0x1a, 0x01, 0x11, 0xea, 0x39, 0x7f, 0xe6, 0x9a, 0x4b, 0x1b, 0xa7, 0xb6, 0x43, 0x4b, 0xac, 0xd7, 0x64, 0x77, 0x4b, 0x84, 0xf3, 0x85, 0x12, 0xbf, 0x67, 0x30, 0xd2, 0xa0, 0xf6, 0xb0, 0xf6, 0x24, 0x1e, 0xab, 0xff, 0xfe, 0xb1, 0x53, 0xff, 0xff, 0xb9, 0xfe, 0xff, 0xff, 0xff, 0xff, 0xaa, 0xa9};
inline constexpr std::uint8_t kFpPlus1Div4[48] = {0x06, 0x80, 0x44, 0x7a, 0x8e, 0x5f, 0xf9, 0xa6, 0x92, 0xc6, 0xe9, 0xed, 0x90, 0xd2, 0xeb, 0x35, 0xd9, 0x1d, 0xd2, 0xe1, 0x3c, 0xe1, 0x44, 0xaf, 0xd9, 0xcc, 0x34, 0xa8, 0x3d, 0xac, 0x3d, 0x89, 0x07, 0xaa, 0xff, 0xff, 0xac, 0x54, 0xff, 0xff, 0xee, 0x7f, 0xbf, 0xff, 0xff, 0xff, 0xea, 0xab};
inline constexpr std::uint8_t kFpMinus1Div2[48] = {0x0d, 0x00, 0x88, 0xf5, 0x1c, 0xbf, 0xf3, 0x4d, 0x25, 0x8d, 0xd3, 0xdb, 0x21, 0xa5, 0xd6, 0x6b, 0xb2, 0x3b, 0xa5, 0xc2, 0x79, 0xc2, 0x89, 0x5f, 0xb3, 0x98, 0x69, 0x50, 0x7b, 0x58, 0x7b, 0x12, 0x0f, 0x55, 0xff, 0xff, 0x58, 0xa9, 0xff, 0xff, 0xdc, 0xff, 0x7f, 0xff, 0xff, 0xff, 0xd5, 0x55};
inline constexpr std::uint8_t kFrMinus2[32] = {0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8, 0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe, 0x5b, 0xfe, 0xff, 0xff, 0xff, 0xfe, 0xff, 0xff, 0xff, 0xff};
inline constexpr std::uint8_t kGroupOrderBe[32] = {0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8, 0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe, 0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x01};

// Curve / pairing parameters.
inline constexpr std::uint64_t kAteLoop = 0xd201000000010000ull;  // |z|, z < 0
inline constexpr std::uint64_t kHEffG1 = 0xd201000000010001ull;   // 1 - z
inline constexpr std::uint64_t kB1[6] = {0xaa270000000cfff3ull, 0x53cc0032fc34000aull, 0x478fe97a6b0a807full, 0xb1d37ebee6ba24d7ull, 0x8ec9733bbf78ab2full, 0x09d645513d83de7eull};  // G1: y^2 = x^3 + 4
inline constexpr std::uint64_t kB2C0[6] = {0xaa270000000cfff3ull, 0x53cc0032fc34000aull, 0x478fe97a6b0a807full, 0xb1d37ebee6ba24d7ull, 0x8ec9733bbf78ab2full, 0x09d645513d83de7eull};  // G2: y^2 = x^3 + 4(1+u)
inline constexpr std::uint64_t kB2C1[6] = {0xaa270000000cfff3ull, 0x53cc0032fc34000aull, 0x478fe97a6b0a807full, 0xb1d37ebee6ba24d7ull, 0x8ec9733bbf78ab2full, 0x09d645513d83de7eull};

// Standard generators (affine, Montgomery form).
inline constexpr std::uint64_t kG1GenX[6] = {0x5cb38790fd530c16ull, 0x7817fc679976fff5ull, 0x154f95c7143ba1c1ull, 0xf0ae6acdf3d0e747ull, 0xedce6ecc21dbf440ull, 0x120177419e0bfb75ull};
inline constexpr std::uint64_t kG1GenY[6] = {0xbaac93d50ce72271ull, 0x8c22631a7918fd8eull, 0xdd595f13570725ceull, 0x51ac582950405194ull, 0x0e1c8c3fad0059c0ull, 0x0bbc3efc5008a26aull};
inline constexpr std::uint64_t kG2GenX0[6] = {0xf5f28fa202940a10ull, 0xb3f5fb2687b4961aull, 0xa1a893b53e2ae580ull, 0x9894999d1a3caee9ull, 0x6f67b7631863366bull, 0x058191924350bcd7ull};
inline constexpr std::uint64_t kG2GenX1[6] = {0xa5a9c0759e23f606ull, 0xaaa0c59dbccd60c3ull, 0x3bb17e18e2867806ull, 0x1b1ab6cc8541b367ull, 0xc2b6ed0ef2158547ull, 0x11922a097360edf3ull};
inline constexpr std::uint64_t kG2GenY0[6] = {0x4c730af860494c4aull, 0x597cfa1f5e369c5aull, 0xe7e6856caa0a635aull, 0xbbefb5e96e0d495full, 0x07d3a975f0ef25a2ull, 0x0083fd8e7e80dae5ull};
inline constexpr std::uint64_t kG2GenY1[6] = {0xadc0fc92df64b05dull, 0x18aa270a2b1461dcull, 0x86adac6a3be4eba0ull, 0x79495c4ec93da33aull, 0xe7175850a43ccaedull, 0x0b2bc2a163de1bf2ull};

// Frobenius: gamma1[i] = xi^(i*(p-1)/6) over Fp2 with xi = 1 + u, i = 1..5.
inline constexpr std::uint64_t kFrobGamma1_1C0[6] = {0x07089552b319d465ull, 0xc6695f92b50a8313ull, 0x97e83cccd117228full, 0xa35baecab2dc29eeull, 0x1ce393ea5daace4dull, 0x08f2220fb0fb66ebull};
inline constexpr std::uint64_t kFrobGamma1_1C1[6] = {0xb2f66aad4ce5d646ull, 0x5842a06bfc497cecull, 0xcf4895d42599d394ull, 0xc11b9cba40a8e8d0ull, 0x2e3813cbe5a0de89ull, 0x110eefda88847fafull};
inline constexpr std::uint64_t kFrobGamma1_2C0[6] = {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull};
inline constexpr std::uint64_t kFrobGamma1_2C1[6] = {0xcd03c9e48671f071ull, 0x5dab22461fcda5d2ull, 0x587042afd3851b95ull, 0x8eb60ebe01bacb9eull, 0x03f97d6e83d050d2ull, 0x18f0206554638741ull};
inline constexpr std::uint64_t kFrobGamma1_3C0[6] = {0x7bcfa7a25aa30fdaull, 0xdc17dec12a927e7cull, 0x2f088dd86b4ebef1ull, 0xd1ca2087da74d4a7ull, 0x2da2596696cebc1dull, 0x0e2b7eedbbfd87d2ull};
inline constexpr std::uint64_t kFrobGamma1_3C1[6] = {0x7bcfa7a25aa30fdaull, 0xdc17dec12a927e7cull, 0x2f088dd86b4ebef1ull, 0xd1ca2087da74d4a7ull, 0x2da2596696cebc1dull, 0x0e2b7eedbbfd87d2ull};
inline constexpr std::uint64_t kFrobGamma1_4C0[6] = {0x890dc9e4867545c3ull, 0x2af322533285a5d5ull, 0x50880866309b7e2cull, 0xa20d1b8c7e881024ull, 0x14e4f04fe2db9068ull, 0x14e56d3f1564853aull};
inline constexpr std::uint64_t kFrobGamma1_4C1[6] = {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull};
inline constexpr std::uint64_t kFrobGamma1_5C0[6] = {0x82d83cf50dbce43full, 0xa2813e53df9d018full, 0xc6f0caa53c65e181ull, 0x7525cf528d50fe95ull, 0x4a85ed50f4798a6bull, 0x171da0fd6cf8eebdull};
inline constexpr std::uint64_t kFrobGamma1_5C1[6] = {0x3726c30af242c66cull, 0x7c2ac1aad1b6fe70ull, 0xa04007fbba4b14a2ull, 0xef517c3266341429ull, 0x0095ba654ed2226bull, 0x02e370eccc86f7ddull};

// hash-to-G1 (RFC 9380 BLS12381G1_XMD:SHA-256_SSWU_RO): 11-isogenous curve.
inline constexpr std::uint64_t kIsoA[6] = {0x2f65aa0e9af5aa51ull, 0x86464c2d1e8416c3ull, 0xb85ce591b7bd31e2ull, 0x27e11c91b5f24e7cull, 0x28376eda6bfc1835ull, 0x155455c3e5071d85ull};
inline constexpr std::uint64_t kIsoB[6] = {0xfb996971fe22a1e0ull, 0x9aa93eb35b742d6full, 0x8c476013de99c5c4ull, 0x873e27c3a221e571ull, 0xca72b5e45a52d888ull, 0x06824061418a386bull};
inline constexpr std::uint64_t kSwuZ[6] = {0x886c00000023ffdcull, 0x0f70008d3090001dull, 0x77672417ed5828c3ull, 0x9dac23e943dc1740ull, 0x50553f1b9c131521ull, 0x078c712fbe0ab6e8ull};
inline constexpr std::uint64_t kIsoXNum[12][6] = {
    {0x4d18b6f3af00131cull, 0x19fa219793fee28cull, 0x3f2885f1467f19aeull, 0x23dcea34f2ffb304ull, 0xd15b58d2ffc00054ull, 0x0913be200a20bef4ull},
    {0x898985385cdbbd8bull, 0x3c79e43cc7d966aaull, 0x1597e193f4cd233aull, 0x8637ef1e4d6623adull, 0x11b22deed20d827bull, 0x07097bc5998784adull},
    {0xa542583a480b664bull, 0xfc7169c026e568c6ull, 0x5ba2ef314ed8b5a6ull, 0x5b5491c05102f0e7ull, 0xdf6e99707d2a0079ull, 0x0784151ed7605524ull},
    {0x494e212870f72741ull, 0xab9be52fbda43021ull, 0x26f5577994e34c3dull, 0x049dfee82aefbd60ull, 0x65dadd7828505289ull, 0x0e93d431ea011aebull},
    {0x90ee774bd6a74d45ull, 0x7ada1c8a41bfb185ull, 0x0f1a8953b325f464ull, 0x104c24211be4805cull, 0x169139d319ea7a8full, 0x09f20ead8e532bf6ull},
    {0x6ddd93e2f43626b7ull, 0xa5482c9aa1ccd7bdull, 0x143245631883f4bdull, 0x2e0a94ccf77ec0dbull, 0xb0282d480e56489full, 0x18f4bfcbb4368929ull},
    {0x23c5f0c953402dfdull, 0x7a43ff6958ce4fe9ull, 0x2c390d3d2da5df63ull, 0xd0df5c98e1f9d70full, 0xffd89869a572b297ull, 0x1277ffc72f25e8feull},
    {0x79f4f0490f06a8a6ull, 0x85f894a88030fd81ull, 0x12da3054b18b6410ull, 0xe2a57f6505880d65ull, 0xbba074f260e400f1ull, 0x08b76279f621d028ull},
    {0xe67245ba78d5b00bull, 0x8456ba9a1f186475ull, 0x7888bff6e6b33bb4ull, 0xe21585b9a30f86cbull, 0x05a69cdcef55feeeull, 0x09e699dd9adfa5acull},
    {0x0de5c357bff57107ull, 0x0a0db4ae6b1a10b2ull, 0xe256bb67b3b3cd8dull, 0x8ad456574e9db24full, 0x0443915f50fd4179ull, 0x098c4bf7de8b6375ull},
    {0xe6b0617e7dd929c7ull, 0xfe6e37d442537375ull, 0x1dafdeda137a489eull, 0xe4efd1ad3f767cebull, 0x4a51d8667f0fe1cfull, 0x054fdf4bbf1d821cull},
    {0x72db2a50658d767bull, 0x8abf91faa257b3d5ull, 0xe969d6833764ab47ull, 0x464170142a1009ebull, 0xb14f01aadb30be2full, 0x18ae6a856f40715dull},
};
inline constexpr std::uint64_t kIsoXDen[11][6] = {
    {0xb962a077fdb0f945ull, 0xa6a9740fefda13a0ull, 0xc14d568c3ed6c544ull, 0xb43fc37b908b133eull, 0x9c0b3ac929599016ull, 0x0165aa6c93ad115full},
    {0x23279a3ba506c1d9ull, 0x92cfca0a9465176aull, 0x3b294ab13755f0ffull, 0x116dda1c5070ae93ull, 0xed4530924cec2045ull, 0x083383d6ed81f1ceull},
    {0x9885c2a6449fecfcull, 0x4a2b54ccd37733f0ull, 0x17da9ffd8738c142ull, 0xa0fba72732b3fafdull, 0xff364f36e54b6812ull, 0x0f29c13c660523e2ull},
    {0xe349cc118278f041ull, 0xd487228f2f3204fbull, 0xc9d325849ade5150ull, 0x43a92bd69c15c2dfull, 0x1c2c7844bc417be4ull, 0x12025184f407440cull},
    {0x587f65ae6acb057bull, 0x1444ef325140201full, 0xfbf995e71270da49ull, 0xccda066072436a42ull, 0x7408904f0f186bb2ull, 0x13b93c63edf6c015ull},
    {0xfb918622cd141920ull, 0x4a4c64423ecaddb4ull, 0x0beb232927f7fb26ull, 0x30f94df6f83a3dc2ull, 0xaeedd424d780f388ull, 0x06cc402dd594bbebull},
    {0xd41f761151b23f8full, 0x32a92465435719b3ull, 0x64f436e888c62cb9ull, 0xdf70a9a1f757c6e4ull, 0x6933a38d5b594c81ull, 0x0c6f7f7237b46606ull},
    {0x693c08747876c8f7ull, 0x22c9850bf9cf80f0ull, 0x8e9071dab950c124ull, 0x89bc62d61c7baf23ull, 0xbc6be2d8dad57c23ull, 0x17916987aa14a122ull},
    {0x1be3ff439c1316fdull, 0x9965243a7571dfa7ull, 0xc7f7f62962f5cd81ull, 0x32c6aa9af394361cull, 0xbbc2ee18e1c227f4ull, 0x0c102cbac531bb34ull},
    {0x997614c97bacbf07ull, 0x61f86372b99192c0ull, 0x5b8c95fc14353fc3ull, 0xca2b066c2a87492full, 0x16178f5bbf698711ull, 0x12a6dcd7f0f4e0e8ull},
    {0x760900000002fffdull, 0xebf4000bc40c0002ull, 0x5f48985753c758baull, 0x77ce585370525745ull, 0x5c071a97a256ec6dull, 0x15f65ec3fa80e493ull},
};
inline constexpr std::uint64_t kIsoYNum[16][6] = {
    {0x2b567ff3e2837267ull, 0x1d4d9e57b958a767ull, 0xce028fea04bd7373ull, 0xcc31a30a0b6cd3dfull, 0x7d7b18a682692693ull, 0x0d300744d42a0310ull},
    {0x99c2555fa542493full, 0xfe7f53cc4874f878ull, 0x5df0608b8f97608aull, 0x14e03832052b49c8ull, 0x706326a6957dd5a4ull, 0x0a8dadd9c2414555ull},
    {0x13d942922a5cf63aull, 0x357e33e36e261e7dull, 0xcf05a27c8456088dull, 0x0000bd1de7ba50f0ull, 0x83d0c7532f8c1fdeull, 0x13f70bf38bbf2905ull},
    {0x5c57fd95bfafbdbbull, 0x28a359a65e541707ull, 0x3983ceb4f6360b6dull, 0xafe19ff6f97e6d53ull, 0xb3468f4550192bf7ull, 0x0bb6cde49d8ba257ull},
    {0x590b62c7ff8a513full, 0x314b4ce372cacefdull, 0x6bef32ce94b8a800ull, 0x6ddf84a095713d5full, 0x64eace4cb0982191ull, 0x0386213c651b888dull},
    {0xa5310a31111bbcddull, 0xa14ac0f5da148982ull, 0xf9ad9cc95423d2e9ull, 0xaa6ec095283ee4a7ull, 0xcf5b1f022e1c9107ull, 0x01fddf5aed881793ull},
    {0x65a572b0d7a7d950ull, 0xe25c2d8183473a19ull, 0xc2fcebe7cb877dbdull, 0x05b2d36c769a89b0ull, 0xba12961be86e9efbull, 0x07eb1b29c1dfde1full},
    {0x93e09572f7c4cd24ull, 0x364e929076795091ull, 0x8569467e68af51b5ull, 0xa47da89439f5340full, 0xf4fa918082e44d64ull, 0x0ad52ba3e6695a79ull},
    {0x911429844e0d5f54ull, 0xd03f51a3516bb233ull, 0x3d587e5640536e66ull, 0xfa86d2a3a9a73482ull, 0xa90ed5adf1ed5537ull, 0x149c9c326a5e7393ull},
    {0x462bbeb03c12921aull, 0xdc9af5fa0a274a17ull, 0x9a558ebde836ebedull, 0x649ef8f11a4fae46ull, 0x8100e1652b3cdc62ull, 0x1862bd62c291dacbull},
    {0x05c9b8ca89f12c26ull, 0x0194160fa9b9ac4full, 0x6a643d5a6879fa2cull, 0x14665bdd8846e19dull, 0xbb1d0d53af3ff6bfull, 0x12c7e1c3b28962e5ull},
    {0xb55ebf900b8a3e17ull, 0xfedc77ec1a9201c4ull, 0x1f07db10ea1a4df4ull, 0x0dfbd15dc41a594dull, 0x389547f2334a5391ull, 0x02419f98165871a4ull},
    {0xb416af000745fc20ull, 0x8e563e9d1ea6d0f5ull, 0x7c763e17763a0652ull, 0x01458ef0159ebbefull, 0x8346fe421f96bb13ull, 0x0d2d7b829ce324d2ull},
    {0x93096bb538d64615ull, 0x6f2a2619951d823aull, 0x8f66b3ea59514fa4ull, 0xf563e63704f7092full, 0x724b136c4cf2d9faull, 0x046959cfcfd0bf49ull},
    {0xea748d4b6e405346ull, 0x91e9079c2c02d58full, 0x41064965946d9b59ull, 0xa06731f1d2bbe1eeull, 0x07f897e267a33f1bull, 0x1017290919210e5full},
    {0x872aa6c17d985097ull, 0xeecc53161264562aull, 0x07afe37afff55002ull, 0x54759078e5be6838ull, 0xc4b92d15db8acca8ull, 0x106d87d1b51d13b9ull},
};
inline constexpr std::uint64_t kIsoYDen[16][6] = {
    {0xeb6c359d47e52b1cull, 0x18ef5f8a10634d60ull, 0xddfa71a0889d5b7eull, 0x723e71dcc5fc1323ull, 0x52f45700b70d5c69ull, 0x0a8b981ee47691f1ull},
    {0x616a3c4f5535b9fbull, 0x6f5f037395dbd911ull, 0xf25f4cc5e35c65daull, 0x3e50dffea3c62658ull, 0x6a33dca523560776ull, 0x0fadeff77b6bfe3eull},
    {0x2be9b66df470059cull, 0x24a2c159a3d36742ull, 0x115dbe7ad10c2a37ull, 0xb6634a652ee5884dull, 0x04fe8bb2b8d81af4ull, 0x01c2a7a256fe9c41ull},
    {0xf27bf8ef3b75a386ull, 0x898b367476c9073full, 0x24482e6b8c2f4e5full, 0xc8e0bbd6fe110806ull, 0x59b0c17f7631448aull, 0x11037cd58b3dbfbdull},
    {0x31c7912ea267eec6ull, 0x1dbf6f1c5fcdb700ull, 0xd30d4fe3ba86fdb1ull, 0x3cae528fbee9a2a4ull, 0xb1cce69b6aa9ad9aull, 0x044393bb632d94fbull},
    {0xc66ef6efeeb5c7e8ull, 0x9824c289dd72bb55ull, 0x71b1a4d2f119981dull, 0x104fc1aafb0919ccull, 0x0e49df01d942a628ull, 0x096c3a09773272d4ull},
    {0x9abc11eb5fadeff4ull, 0x32dca50a885728f0ull, 0xfb1fa3721569734cull, 0xc4b76271ea6506b3ull, 0xd466a75599ce728eull, 0x0c81d4645f4cb6edull},
    {0x4199f10e5b8be45bull, 0xda64e495b1e87930ull, 0xcb353efe9b33e4ffull, 0x9e9efb24aa6424c6ull, 0xf08d33680a237465ull, 0x0d3378023e4c7406ull},
    {0x7eb4ae92ec74d3a5ull, 0xc341b4aa9fac3497ull, 0x5be603899e907687ull, 0x03bfd9cca75cbdebull, 0x564c2935a96bfa93ull, 0x0ef3c33371e2fdb5ull},
    {0x7ee91fd449f6ac2eull, 0xe5d5bd5cb9357a30ull, 0x773a8ca5196b1380ull, 0xd0fda172174ed023ull, 0x6cb95e0fa776aeadull, 0x0d22d5a40cec7cffull},
    {0xf727e09285fd8519ull, 0xdc9d55a83017897bull, 0x7549d8bd057894aeull, 0x178419613d90d8f8ull, 0xfce95ebdeb5b490aull, 0x0467ffaef23fc49eull},
    {0xc1769e6a7c385f1bull, 0x79bc930deac01c03ull, 0x5461c75a23ede3b5ull, 0x6e20829e5c230c45ull, 0x828e0f1e772a53cdull, 0x116aefa749127bffull},
    {0x101c10bf2744c10aull, 0xbbf18d053a6a3154ull, 0xa0ecf39ef026f602ull, 0xfc009d4996dc5153ull, 0xb9000209d5bd08d3ull, 0x189e5fe4470cd73cull},
    {0x7ebd546ca1575ed2ull, 0xe47d5a981d081b55ull, 0x57b2b625b6d4ca21ull, 0xb0a1ba04228520ccull, 0x98738983c2107ff3ull, 0x13dddbc4799d81d6ull},
    {0x09319f2e39834935ull, 0x039e952cbdb05c21ull, 0x55ba77a9a2f76493ull, 0xfd04e3dfc6086467ull, 0xfb95832e7d78742eull, 0x0ef9c24eccaf5e0eull},
    {0x760900000002fffdull, 0xebf4000bc40c0002ull, 0x5f48985753c758baull, 0x77ce585370525745ull, 0x5c071a97a256ec6dull, 0x15f65ec3fa80e493ull},
};

}  // namespace bpksharp::ff::consts
